#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ktorbit/classifier.hpp"
#include "ktorbit/group_actions.hpp"
#include "ktorbit/rat_matrix.hpp"

namespace ktorbit {

/// Raised when an exhaustive oracle is asked to work beyond its size limit.
class OracleLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Determinant by cofactor expansion along the first row, memoized over the
/// set of remaining columns. Works for any commutative ring element type.
template <class T>
T cofactor_det(const std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("cofactor_det needs a square matrix");
  }
  if (n > 20) throw OracleLimitError("cofactor_det limited to 20x20");
  // memo[mask] = det of the minor formed by the last popcount(mask) rows and
  // the columns in mask.
  std::map<unsigned long, T> memo;
  auto rec = [&](auto&& self, unsigned long mask, std::size_t row) -> T {
    if (row == n) return T(1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    T sum(0);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if ((mask & (1UL << c)) == 0) continue;
      const T sub = self(self, mask & ~(1UL << c), row + 1);
      if (sign > 0) {
        sum = sum + m[row][c] * sub;
      } else {
        sum = sum - m[row][c] * sub;
      }
      sign = -sign;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  return rec(rec, (1UL << n) - 1, 0);
}

/// Rank as the largest k with a nonzero k x k minor (exhaustive enumeration).
/// Throws OracleLimitError beyond 6 rows or columns.
std::size_t rank_oracle(const RatMatrix& m);

/// Max component error between the central difference of the finite action
/// at flow parameter 0 and the generator row. The flow parameter s maps to
/// the finite parameter as: translations and V5 t = s; rotation t = tan(s/2);
/// boost t = tanh(s/2); V4 and V6 t = exp(s). `fn` replaces the generator
/// table the derivative is compared against. Requires 0 < h <= 0.1.
double generator_fd_check(const KTParams& k, GeneratorId id, double h, const GeneratorFn& fn = {});

using Rng = std::mt19937_64;

/// Rational p/q with |p| <= max_num and 1 <= q <= max_den.
Rational random_rational(Rng& rng, int max_num = 9, int max_den = 8);
KTParams random_tensor(Rng& rng, Signature sig, int max_num = 9, int max_den = 8);
/// A random tensor inside the given orbit (never the zero tensor).
KTParams random_tensor_in_orbit(Rng& rng, OrbitLabel label);
/// Parameters drawn uniformly from [-1, 1], converted exactly.
KTParams random_float_tensor(Rng& rng, Signature sig);
/// A random word of 1..max_word steps drawn from the finite actions, the
/// half turn, R0, R1, R2 and (Euclidean only) RSwap.
GroupWord random_word(Rng& rng, Signature sig, std::size_t max_word);

struct FuzzFailure {
  KTParams seed;
  GroupWord word;
  OrbitLabel before;
  OrbitLabel after;
  std::string error;  // nonempty when applying the word threw
};

struct FuzzReport {
  std::size_t trials = 0;
  std::vector<FuzzFailure> failures;
  std::chrono::duration<double> elapsed{};
  [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// n random tensors (orbits chosen uniformly over both signatures) pushed
/// through random words; every label change is recorded.
FuzzReport fuzz_orbit_invariance(std::size_t n, std::size_t max_word, std::uint64_t rng_seed);

/// Axis-aligned box with exact corners.
struct RationalBox {
  Rational u0;
  Rational u1;
  Rational v0;
  Rational v1;
};

struct DiscriminantCensus {
  std::size_t negative = 0;
  std::size_t zero = 0;
  std::size_t positive = 0;
  friend bool operator==(const DiscriminantCensus&, const DiscriminantCensus&) = default;
};

/// Exact grid points u0 + i (u1 - u0)/(n - 1), likewise in v. Requires n >= 2.
std::vector<Point2<Rational>> census_grid(const RationalBox& box, std::size_t n);

/// Exact sign census of discriminant_poly(k) over the n x n grid.
DiscriminantCensus grid_discriminant_census(const KTParams& k, const RationalBox& box, std::size_t n);

struct ConsistencyResult {
  bool ok = true;
  /// False when the band structure was skipped because the null lines are
  /// outside the box or closer together than the grid can resolve.
  bool structure_checked = true;
  std::string detail;
  DiscriminantCensus census;
};

/// Cross-checks singular_set(k) against the discriminant: pointwise sign
/// agreement on the grid, the factorisation/point data, the variant implied
/// by the shape of the factors, and grid structure (bands, empty, whole plane)
/// where the grid resolves it.
ConsistencyResult check_singular_set(const KTParams& k, const RationalBox& box, std::size_t n);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerificationSummary {
  std::vector<CheckResult> checks;
  [[nodiscard]] bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

/// The full self-check: Lie closure, finite-difference flow checks, orbit
/// fuzzing (skipped for trials = 0), atlas labels, rank table and singular
/// sets. `fn` overrides the generator table used by the generator checks.
VerificationSummary run_verification(std::size_t trials, std::uint64_t seed, const GeneratorFn& fn = {});

}  // namespace ktorbit
