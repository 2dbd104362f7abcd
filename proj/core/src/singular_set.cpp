#include "ktorbit/singular_set.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "ktorbit/classifier.hpp"

namespace ktorbit {

namespace {

constexpr std::array<std::string_view, 11> kKindNames{
    "Empty",  "OnePoint",  "TwoPoints",           "Line",         "TwoOrthogonalLines", "Strip",
    "StripPlusOrthogonalLine", "TwoStripsMinusIntersection", "HalfPlane", "TwoOppositeQuadrants",
    "WholePlane"};

UnivariatePoly quadratic(const Rational& a, const Rational& b, const Rational& c) {
  const UnivariatePoly s = UnivariatePoly::variable(0);
  return UnivariatePoly(a) * s * s + UnivariatePoly(b) * s + UnivariatePoly(c);
}

Rational coefficient(const UnivariatePoly& p, unsigned degree) { return p.coefficient({degree}); }

Point2<Rational> from_centered(const Point2<Rational>& center, const Rational& X, const Rational& Y) {
  return {X + center.u, Y + center.v};
}

void fill_euclidean_points(SingularSetDescription& d, const KTParams& k) {
  d.center = Point2<Rational>{-k.beta / k.gamma, -k.alpha / k.gamma};
  const Rational g2 = k.gamma * k.gamma;
  d.hyperbola_p = (k.alpha * k.beta + k.gamma * k.C) / g2;
  d.hyperbola_q = (k.alpha * k.alpha - k.beta * k.beta - k.gamma * (k.A - k.B)) / g2;
  const Rational& p = d.hyperbola_p;
  const Rational& q = d.hyperbola_q;

  if (p.is_zero() && q.is_zero()) {
    d.kind = SingularKind::OnePoint;
    d.exact_points = {*d.center};
    d.approx_points = {{d.center->u.to_double(), d.center->v.to_double()}};
    return;
  }
  d.kind = SingularKind::TwoPoints;

  // Y + iX = +-sqrt(q + 2ip): with r = |q + 2ip|, Y^2 = (r + q)/2, X^2 = (r - q)/2
  // and sign(XY) = sign(p).
  const int ps = p.sign() < 0 ? -1 : 1;
  if (const auto r = exact_sqrt(q * q + Rational(4) * p * p)) {
    const auto a = exact_sqrt((*r + q) / Rational(2));
    const auto b = exact_sqrt((*r - q) / Rational(2));
    if (a && b) {
      const Rational X = Rational(ps) * *b;
      d.exact_points = {from_centered(*d.center, X, *a), from_centered(*d.center, -X, -*a)};
    }
  }
  const double pd = p.to_double();
  const double qd = q.to_double();
  const double r = std::hypot(qd, 2.0 * pd);
  const double Y = std::sqrt(std::max(0.0, (r + qd) / 2.0));
  const double X = ps * std::sqrt(std::max(0.0, (r - qd) / 2.0));
  const double cu = d.center->u.to_double();
  const double cv = d.center->v.to_double();
  d.approx_points = {{X + cu, Y + cv}, {-X + cu, -Y + cv}};
}

int sign_of(const UnivariatePoly& poly, const Rational& x) {
  const std::array<Rational, 1> at{x};
  return poly.evaluate(std::span<const Rational, 1>(at)).sign();
}

}  // namespace

std::string_view to_string(SingularKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

std::optional<SingularKind> parse_singular_kind(std::string_view text) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == text) return static_cast<SingularKind>(i);
  }
  return std::nullopt;
}

std::vector<double> real_roots(const UnivariatePoly& p) {
  const Rational a = coefficient(p, 2);
  const Rational b = coefficient(p, 1);
  const Rational c = coefficient(p, 0);
  if (a.is_zero()) {
    if (b.is_zero()) return {};
    return {(-c / b).to_double()};
  }
  const Rational disc = b * b - Rational(4) * a * c;
  if (disc.sign() < 0) return {};
  if (disc.is_zero()) return {(-b / (Rational(2) * a)).to_double()};
  // Numerically stable pair of roots.
  const double bd = b.to_double();
  const double root = std::sqrt(disc.to_double());
  const double qv = -0.5 * (bd + (bd >= 0 ? root : -root));
  std::vector<double> out{qv / a.to_double(), c.to_double() / qv};
  std::sort(out.begin(), out.end());
  return out;
}

SingularSetDescription singular_set(const KTParams& k) {
  SingularSetDescription d;
  d.signature = k.signature;
  const OrbitLabel label = classify_label(k);

  if (k.signature == Signature::Euclidean) {
    switch (label) {
      case OrbitLabel::E1:
      case OrbitLabel::E3:
        fill_euclidean_points(d, k);
        break;
      case OrbitLabel::E2: {
        // alpha x + beta y = C and -2 beta x + 2 alpha y = B - A.
        const Rational det = Rational(2) * (k.alpha * k.alpha + k.beta * k.beta);
        const Rational rhs = k.B - k.A;
        const Rational x = (Rational(2) * k.alpha * k.C - k.beta * rhs) / det;
        const Rational y = (k.alpha * rhs + Rational(2) * k.beta * k.C) / det;
        d.kind = SingularKind::OnePoint;
        d.exact_points = {{x, y}};
        d.approx_points = {{x.to_double(), y.to_double()}};
        break;
      }
      case OrbitLabel::E4:
        d.kind = SingularKind::Empty;
        break;
      default:
        d.kind = SingularKind::WholePlane;
        break;
    }
    return d;
  }

  d.factor_plus = quadratic(k.gamma, Rational(2) * (k.alpha + k.beta), k.A + k.B + Rational(2) * k.C);
  d.factor_minus = quadratic(k.gamma, Rational(2) * (k.alpha - k.beta), k.A + k.B - Rational(2) * k.C);
  d.plus_roots = real_roots(d.factor_plus);
  d.minus_roots = real_roots(d.factor_minus);
  switch (label) {
    case OrbitLabel::M1:
    case OrbitLabel::M11:
      d.kind = SingularKind::Empty;
      break;
    case OrbitLabel::M2:
      d.kind = SingularKind::Strip;
      break;
    case OrbitLabel::M3:
      d.kind = SingularKind::TwoStripsMinusIntersection;
      break;
    case OrbitLabel::M4:
      d.kind = SingularKind::Line;
      break;
    case OrbitLabel::M5:
      d.kind = SingularKind::StripPlusOrthogonalLine;
      break;
    case OrbitLabel::M6:
      d.kind = SingularKind::TwoOrthogonalLines;
      break;
    case OrbitLabel::M7:
    case OrbitLabel::M8:
      d.kind = SingularKind::TwoOppositeQuadrants;
      break;
    case OrbitLabel::M9:
      d.kind = SingularKind::HalfPlane;
      break;
    default:
      d.kind = SingularKind::WholePlane;
      break;
  }
  return d;
}

int predicted_discriminant_sign(const SingularSetDescription& d, const Point2<Rational>& p) {
  if (d.signature == Signature::Minkowski) {
    // u = t, v = x.
    return sign_of(d.factor_plus, p.v + p.u) * sign_of(d.factor_minus, p.v - p.u);
  }
  switch (d.kind) {
    case SingularKind::Empty:
      return 1;
    case SingularKind::WholePlane:
      return 0;
    default:
      break;
  }
  if (d.center) {
    const Rational X = p.u - d.center->u;
    const Rational Y = p.v - d.center->v;
    return X * Y == d.hyperbola_p && Y * Y - X * X == d.hyperbola_q ? 0 : 1;
  }
  return std::find(d.exact_points.begin(), d.exact_points.end(), p) != d.exact_points.end() ? 0 : 1;
}

}  // namespace ktorbit
