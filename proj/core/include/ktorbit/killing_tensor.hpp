#pragma once

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ktorbit/polynomial.hpp"
#include "ktorbit/rational.hpp"

namespace ktorbit {

/// Flat metric of the plane. Euclidean: g = diag(1, 1) in (x, y).
/// Minkowski: g = diag(1, -1) in (t, x).
enum class Signature { Euclidean, Minkowski };

std::string_view to_string(Signature s);
/// Accepts "euclidean"/"minkowski" (case-insensitive) and "E"/"M".
std::optional<Signature> parse_signature(std::string_view text);

/// Raised when an operation receives a tensor of the wrong signature.
class SignatureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Index of each parameter in the coordinate order (A, B, C, alpha, beta, gamma).
enum ParamIndex : std::size_t { kA = 0, kB, kC, kAlpha, kBeta, kGamma };

using ParamVector = std::array<Rational, 6>;

/// A valence-two Killing tensor of the flat plane, given by its six
/// parameters. Every 6-tuple is a Killing tensor; the family is a vector space.
struct KTParams {
  Signature signature = Signature::Euclidean;
  Rational A, B, C, alpha, beta, gamma;

  static KTParams from_vector(Signature sig, const ParamVector& v);
  [[nodiscard]] ParamVector to_vector() const { return {A, B, C, alpha, beta, gamma}; }
  [[nodiscard]] std::array<double, 6> to_doubles() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const KTParams&, const KTParams&) = default;
};

/// Point of the plane. Euclidean (u, v) = (x, y); Minkowski (u, v) = (t, x).
template <class T>
struct Point2 {
  T u{};
  T v{};
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Symmetric 2x2 matrix; k21 is implied equal to k12.
template <class T>
struct SymMatrix2 {
  T k11{};
  T k12{};
  T k22{};
  friend bool operator==(const SymMatrix2&, const SymMatrix2&) = default;
};

/// Momentum components p_i on the cotangent bundle.
template <class T>
struct Covector2 {
  T p1{};
  T p2{};
};

using BivariatePoly = Polynomial<2>;    // variables (u, v)
using PhaseSpacePoly = Polynomial<4>;   // variables (u, v, p1, p2)
using UnivariatePoly = Polynomial<1>;   // variable s
using TensorField = SymMatrix2<BivariatePoly>;

/// Diagonal entries of the (constant) metric: g_11 = g^11, g_22 = g^22.
Rational metric_diagonal(Signature sig, std::size_t index);

/// Contravariant components K^ij at p, exact.
SymMatrix2<Rational> components_at(const KTParams& k, const Point2<Rational>& p);

/// Contravariant components K^ij at p from double parameters.
SymMatrix2<double> components_at(Signature sig, const std::array<double, 6>& params, const Point2<double>& p);

/// K^ij as polynomials in (u, v).
TensorField component_field(const KTParams& k);

/// Reads the six parameters back off a tensor field. Returns nullopt when the
/// field is not a member of the Killing family for this signature.
std::optional<KTParams> params_from_field(const TensorField& field, Signature sig);

/// The metric tensor g as a member of the family.
KTParams metric_tensor(Signature sig);

/// {I*, H} for I* = K^ij p_i p_j and H = (1/2) g^ij p_i p_j, as a polynomial
/// in (u, v, p1, p2). Zero iff the field is a Killing tensor of the flat metric.
PhaseSpacePoly poisson_bracket_with_H(const TensorField& field, Signature sig);

/// s -> K^ij(q0 + s v) p_i p_j with p_i = g_ij v^j (the momentum of the
/// straight-line geodesic through q0 with velocity v).
/// Throws std::invalid_argument for v = 0.
UnivariatePoly first_integral_along_geodesic(const KTParams& k, const Point2<Rational>& q0,
                                             const Point2<Rational>& velocity);

enum class EigenKind { RealSimple, RealDouble, ComplexPair };
std::string_view to_string(EigenKind kind);

/// Eigen-decomposition of the mixed tensor K^i_j = K^im g_mj at a point.
struct EigenReport {
  EigenKind kind = EigenKind::RealDouble;
  double discriminant = 0.0;  // trace^2 - 4 det of K^i_j
  std::complex<double> lambda_plus;
  std::complex<double> lambda_minus;
  /// Unit (Euclidean norm) eigenvectors, present only for RealSimple.
  std::optional<std::array<double, 2>> vector_plus;
  std::optional<std::array<double, 2>> vector_minus;
};

/// `relative_tolerance` scales with the squared magnitude of K^i_j to decide
/// when the discriminant counts as zero.
EigenReport eigenstructure_at(const KTParams& k, const Point2<double>& p, double relative_tolerance = 1e-9);
EigenReport eigenstructure_at(Signature sig, const std::array<double, 6>& params, const Point2<double>& p,
                              double relative_tolerance = 1e-9);

/// (trace)^2 - 4 det of K^i_j, expanded directly from the components.
/// Euclidean: (K11 - K22)^2 + 4 K12^2. Minkowski: (K11 + K22)^2 - 4 K12^2.
BivariatePoly discriminant_poly(const KTParams& k);

/// g(a, b) = g_ij a^i b^j.
double metric_product(Signature sig, const std::array<double, 2>& a, const std::array<double, 2>& b);

}  // namespace ktorbit
