#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ktorbit/killing_tensor.hpp"

namespace ktorbit::cli {

using json = nlohmann::json;

/// Malformed or invalid user input (maps to exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses JSON keeping every floating-point literal as its source text, so
/// "0.1" can later be read as exactly 1/10. Throws InputError.
json parse_json_exact(std::string_view text);

/// Reads a JSON number, a number kept as text by parse_json_exact, or a
/// "p/q" string. Throws InputError.
Rational rational_from_json(const json& value, std::string_view field);

/// A tensor input record: {"metric", "A", "B", "C", "alpha", "beta",
/// "gamma", optional "id"}. Throws InputError.
struct TensorInput {
  KTParams params;
  std::optional<std::string> id;
};
TensorInput tensor_from_json(const json& record);

/// Exact rational as a JSON string "p" or "p/q".
json to_json(const Rational& r);
json params_to_json(const KTParams& k);

}  // namespace ktorbit::cli
