#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "ktorbit/invariants.hpp"
#include "ktorbit/killing_tensor.hpp"
#include "ktorbit/singular_set.hpp"

namespace ktorbit {

enum class OrbitLabel { E1, E2, E3, E4, E5, M1, M2, M3, M4, M5, M6, M7, M8, M9, M10, M11, M12, M13, M14 };

std::string_view to_string(OrbitLabel label);
std::optional<OrbitLabel> parse_label(std::string_view text);

/// Static metadata of an orbit.
struct OrbitClass {
  OrbitLabel label;
  Signature signature;
  std::string_view web_name;
  std::vector<std::string_view> sc_labels;  // Minkowski separable-coordinate types
  std::size_t expected_rank;
  bool characteristic;  // tensors have real simple eigenvalues on an open dense set
};

const OrbitClass& orbit_class(OrbitLabel label);

/// All labels of one signature, in order.
std::span<const OrbitLabel> all_labels(Signature sig);
/// All 19 labels, Euclidean first.
std::span<const OrbitLabel> all_labels();

using Invariants = std::variant<EuclideanInvariants, MinkowskiInvariants>;

struct ClassificationReport {
  const OrbitClass* orbit = nullptr;
  Invariants invariants;
  SurfaceFlags surfaces;
  std::size_t rank = 0;
  bool is_zero = false;
  SingularSetDescription singular_set;

  [[nodiscard]] OrbitLabel label() const { return orbit->label; }
};

/// The orbit label alone, by exact sign tests on the invariants.
OrbitLabel classify_label(const KTParams& k);

/// Full report: label, invariants, surfaces, generator rank, singular set.
ClassificationReport classify(const KTParams& k);

/// True when both tensors lie in the same orbit. Throws SignatureError when
/// the signatures differ.
bool same_orbit(const KTParams& k1, const KTParams& k2);

/// Singular set of k, with the variant fixed by the orbit.
SingularSetDescription singular_set(const KTParams& k);

/// The representative tensors listed for an orbit. The metric stands in for
/// the metric-multiple orbits E5 and M14.
std::vector<KTParams> representatives(OrbitLabel label);

}  // namespace ktorbit
