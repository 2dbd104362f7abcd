#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ktorbit/classifier.hpp"
#include "ktorbit_cli/json_io.hpp"

namespace ktorbit::cli {

/// JSON-facing classification result. Exact values are "p/q" strings.
struct ReportRecord {
  std::optional<std::string> id;
  std::string metric;
  std::map<std::string, std::string> tensor;  // A, B, C, alpha, beta, gamma
  std::string label;
  std::string web_name;
  std::vector<std::string> sc_labels;
  std::map<std::string, std::string> invariants;
  std::vector<std::string> surfaces;  // names of the surfaces containing the tensor
  std::size_t rank = 0;
  std::size_t expected_rank = 0;
  bool characteristic = false;
  bool is_zero = false;
  json singular_set;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

ReportRecord make_report(const KTParams& k, const std::optional<std::string>& id = std::nullopt);

json to_json(const ReportRecord& r);
/// Inverse of to_json. Throws InputError on a malformed document.
ReportRecord report_from_json(const json& j);

json singular_set_to_json(const SingularSetDescription& d);

}  // namespace ktorbit::cli
