#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ktorbit/killing_tensor.hpp"
#include "ktorbit/polynomial.hpp"
#include "ktorbit/rat_matrix.hpp"

namespace ktorbit {

/// Infinitesimal generators of the web-preserving group:
/// V1, V2 translations; V3 rotation (Euclidean) or boost (Minkowski);
/// V4 dilatation; V5 addition of the metric; V6 scalar multiplication.
enum class GeneratorId { V1 = 0, V2, V3, V4, V5, V6 };

inline constexpr std::array<GeneratorId, 6> kAllGenerators{GeneratorId::V1, GeneratorId::V2, GeneratorId::V3,
                                                           GeneratorId::V4, GeneratorId::V5, GeneratorId::V6};

std::string_view to_string(GeneratorId id);
/// Accepts "V1" .. "V6" in either case.
std::optional<GeneratorId> parse_generator(std::string_view text);

/// Component row (dA, dB, dC, dalpha, dbeta, dgamma) of a generator at k.
ParamVector generator_vector(GeneratorId id, const KTParams& k);

/// Pluggable generator table; the default is generator_vector. Verification
/// code accepts one so that a deliberately wrong table can be injected.
using GeneratorFn = std::function<ParamVector(GeneratorId, const KTParams&)>;

/// 6x6 matrix whose rows are V1..V6 at k.
RatMatrix generator_matrix(const KTParams& k, const GeneratorFn& fn = {});

/// Exact rank of generator_matrix(k): the dimension of the orbit through k.
std::size_t generator_rank(const KTParams& k);

/// Raised for parameters outside the domain of a finite action.
class InvalidParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// 2x2 exact matrix, row-major.
using Mat2 = std::array<std::array<Rational, 2>, 2>;

/// Pushforward of k by the affine map q = L p + b:
///   K'(q) = L K(L^-1 (q - b)) L^T,
/// computed by polynomial substitution and re-extraction of the six
/// parameters. Throws InvalidParameterError if L is singular or the image
/// leaves the Killing family (L not a similarity of the metric).
KTParams pushforward_affine(const KTParams& k, const Mat2& L, const Point2<Rational>& b);

/// Finite one-parameter action of a generator.
///   V1: translate u by t        V2: translate v by t
///   V3: rotation with tan(theta/2) = t (Euclidean, any t) or
///       boost with tanh(mu/2) = t (Minkowski, |t| < 1)
///   V4: dilatation by factor t > 0
///   V5: add t times the metric   V6: multiply by t != 0
/// Throws InvalidParameterError for parameters outside these domains.
KTParams apply_finite(const KTParams& k, GeneratorId id, const Rational& t);

/// The rotation by pi, (u, v) -> (-u, -v); the t = infinity point of V3.
KTParams apply_half_turn(const KTParams& k);

/// Parameter t3 with apply_finite(apply_finite(k, id, t1), id, t2) =
/// apply_finite(k, id, t3). nullopt when the composite is the half turn.
std::optional<Rational> compose_parameters(Signature sig, GeneratorId id, const Rational& t1,
                                           const Rational& t2);

/// Discrete maps:
///   R0: K -> -K                   R1: C -> -C, alpha -> -alpha (v -> -v)
///   R2: C -> -C, beta -> -beta (u -> -u)
///   RSwap: A <-> B, alpha <-> beta (exchange of the coordinates)
enum class DiscreteId { R0, R1, R2, RSwap };

std::string_view to_string(DiscreteId id);
KTParams apply_discrete(const KTParams& k, DiscreteId id);

struct FlowStep {
  GeneratorId id = GeneratorId::V1;
  Rational parameter;
  friend bool operator==(const FlowStep&, const FlowStep&) = default;
};

struct HalfTurn {
  friend bool operator==(const HalfTurn&, const HalfTurn&) = default;
};

using GroupStep = std::variant<FlowStep, DiscreteId, HalfTurn>;
using GroupWord = std::vector<GroupStep>;

std::string to_string(const GroupStep& step);
std::string to_string(const GroupWord& word);

/// Applies the steps left to right.
KTParams apply_word(const KTParams& k, const GroupWord& word);

/// A vector field on the six-dimensional parameter space with polynomial
/// components in (A, B, C, alpha, beta, gamma).
using ParamPoly = Polynomial<6>;
using VectorField6 = std::array<ParamPoly, 6>;

/// Generator as a symbolic vector field. Generators are affine in the
/// parameters, so the field is recovered from its values at 0 and e_i.
VectorField6 generator_field(GeneratorId id, Signature sig, const GeneratorFn& fn = {});

/// [X, Y]^k = X^m d_m Y^k - Y^m d_m X^k.
VectorField6 lie_bracket(const VectorField6& x, const VectorField6& y);

/// Constant coefficients c with [V_i, V_j] = sum_k c_k V_k, or nullopt when
/// no constant-coefficient combination exists.
std::optional<std::array<Rational, 6>> lie_bracket_decompose(GeneratorId i, GeneratorId j, Signature sig,
                                                             const GeneratorFn& fn = {});

}  // namespace ktorbit
