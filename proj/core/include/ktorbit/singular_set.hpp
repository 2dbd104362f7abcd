#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ktorbit/killing_tensor.hpp"

namespace ktorbit {

/// Shape of the set where the eigenvalues of K^i_j are not real and simple.
enum class SingularKind {
  Empty,
  OnePoint,
  TwoPoints,
  Line,
  TwoOrthogonalLines,
  Strip,
  StripPlusOrthogonalLine,
  TwoStripsMinusIntersection,
  HalfPlane,
  TwoOppositeQuadrants,
  WholePlane,
};

std::string_view to_string(SingularKind kind);
std::optional<SingularKind> parse_singular_kind(std::string_view text);

/// Exact symbolic description of the singular set.
///
/// Euclidean, gamma != 0: in coordinates X = x + beta/gamma, Y = y + alpha/gamma
/// centred at `center`, the singular points solve X Y = p, Y^2 - X^2 = q.
/// `exact_points` is filled when the points are rational; `approx_points`
/// always holds every point.
///
/// Minkowski: disc = P(x + t) Q(x - t), with
///   P(s) = gamma s^2 + 2(alpha + beta) s + A + B + 2C,
///   Q(w) = gamma w^2 + 2(alpha - beta) w + A + B - 2C.
/// The null lines x + t = r (r a root of P) and x - t = r (r a root of Q)
/// bound the singular region.
struct SingularSetDescription {
  Signature signature = Signature::Euclidean;
  SingularKind kind = SingularKind::WholePlane;

  std::optional<Point2<Rational>> center;
  Rational hyperbola_p;
  Rational hyperbola_q;
  std::vector<Point2<Rational>> exact_points;
  std::vector<Point2<double>> approx_points;

  UnivariatePoly factor_plus;
  UnivariatePoly factor_minus;
  std::vector<double> plus_roots;   // sorted distinct real roots of P
  std::vector<double> minus_roots;  // sorted distinct real roots of Q
};

/// Sorted distinct real roots of a polynomial of degree <= 2 (empty for the
/// zero polynomial and for constants).
std::vector<double> real_roots(const UnivariatePoly& p);

/// Sign (-1, 0, +1) of the discriminant at p as predicted by the description
/// alone (factors for Minkowski, singular points for Euclidean).
int predicted_discriminant_sign(const SingularSetDescription& d, const Point2<Rational>& p);

}  // namespace ktorbit
