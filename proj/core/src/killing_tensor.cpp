#include "ktorbit/killing_tensor.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace ktorbit {

namespace {

// Sign of the linear and bilinear terms of K^12: C - alpha x - beta y - gamma xy
// in the Euclidean plane, C + alpha t + beta x + gamma tx in the Minkowski plane.
int k12_sign(Signature sig) { return sig == Signature::Euclidean ? -1 : 1; }

PhaseSpacePoly lift(const BivariatePoly& p) {
  return p.substitute<4>({PhaseSpacePoly::variable(0), PhaseSpacePoly::variable(1)});
}

std::array<double, 2> normalized(double x, double y) {
  const double n = std::hypot(x, y);
  return {x / n, y / n};
}

std::array<double, 2> eigenvector(double a, double b, double c, double d, double lambda) {
  // Rows of (M - lambda I) are orthogonal (Euclidean sense) to the eigenvector;
  // use whichever row is better conditioned.
  const double x1 = b;
  const double y1 = lambda - a;
  const double x2 = lambda - d;
  const double y2 = c;
  if (std::hypot(x1, y1) >= std::hypot(x2, y2)) return normalized(x1, y1);
  return normalized(x2, y2);
}

}  // namespace

std::string_view to_string(Signature s) { return s == Signature::Euclidean ? "euclidean" : "minkowski"; }

std::optional<Signature> parse_signature(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "euclidean" || lower == "e" || lower == "e2") return Signature::Euclidean;
  if (lower == "minkowski" || lower == "m" || lower == "m2") return Signature::Minkowski;
  return std::nullopt;
}

KTParams KTParams::from_vector(Signature sig, const ParamVector& v) {
  return KTParams{sig, v[kA], v[kB], v[kC], v[kAlpha], v[kBeta], v[kGamma]};
}

std::array<double, 6> KTParams::to_doubles() const {
  return {A.to_double(), B.to_double(), C.to_double(), alpha.to_double(), beta.to_double(), gamma.to_double()};
}

bool KTParams::is_zero() const {
  return A.is_zero() && B.is_zero() && C.is_zero() && alpha.is_zero() && beta.is_zero() && gamma.is_zero();
}

std::string KTParams::to_string() const {
  std::ostringstream os;
  os << ktorbit::to_string(signature) << "(A=" << A << ", B=" << B << ", C=" << C << ", alpha=" << alpha
     << ", beta=" << beta << ", gamma=" << gamma << ')';
  return os.str();
}

Rational metric_diagonal(Signature sig, std::size_t index) {
  if (index == 0 || sig == Signature::Euclidean) return Rational(1);
  return Rational(-1);
}

SymMatrix2<Rational> components_at(const KTParams& k, const Point2<Rational>& p) {
  const Rational s(k12_sign(k.signature));
  return {k.A + Rational(2) * k.alpha * p.v + k.gamma * p.v * p.v,
          k.C + s * (k.alpha * p.u + k.beta * p.v + k.gamma * p.u * p.v),
          k.B + Rational(2) * k.beta * p.u + k.gamma * p.u * p.u};
}

SymMatrix2<double> components_at(Signature sig, const std::array<double, 6>& c, const Point2<double>& p) {
  const double s = k12_sign(sig);
  return {c[kA] + 2.0 * c[kAlpha] * p.v + c[kGamma] * p.v * p.v,
          c[kC] + s * (c[kAlpha] * p.u + c[kBeta] * p.v + c[kGamma] * p.u * p.v),
          c[kB] + 2.0 * c[kBeta] * p.u + c[kGamma] * p.u * p.u};
}

TensorField component_field(const KTParams& k) {
  const BivariatePoly u = BivariatePoly::variable(0);
  const BivariatePoly v = BivariatePoly::variable(1);
  const BivariatePoly s(k12_sign(k.signature));
  return {BivariatePoly(k.A) + BivariatePoly(Rational(2) * k.alpha) * v + BivariatePoly(k.gamma) * v * v,
          BivariatePoly(k.C) + s * (BivariatePoly(k.alpha) * u + BivariatePoly(k.beta) * v +
                                    BivariatePoly(k.gamma) * u * v),
          BivariatePoly(k.B) + BivariatePoly(Rational(2) * k.beta) * u + BivariatePoly(k.gamma) * u * u};
}

std::optional<KTParams> params_from_field(const TensorField& field, Signature sig) {
  KTParams k;
  k.signature = sig;
  k.A = field.k11.coefficient({0, 0});
  k.alpha = field.k11.coefficient({0, 1}) / Rational(2);
  k.gamma = field.k11.coefficient({0, 2});
  k.B = field.k22.coefficient({0, 0});
  k.beta = field.k22.coefficient({1, 0}) / Rational(2);
  k.C = field.k12.coefficient({0, 0});
  if (component_field(k) != field) return std::nullopt;
  return k;
}

KTParams metric_tensor(Signature sig) {
  KTParams k;
  k.signature = sig;
  k.A = metric_diagonal(sig, 0);
  k.B = metric_diagonal(sig, 1);
  return k;
}

PhaseSpacePoly poisson_bracket_with_H(const TensorField& field, Signature sig) {
  const PhaseSpacePoly p1 = PhaseSpacePoly::variable(2);
  const PhaseSpacePoly p2 = PhaseSpacePoly::variable(3);
  const PhaseSpacePoly integral =
      lift(field.k11) * p1 * p1 + PhaseSpacePoly(2) * lift(field.k12) * p1 * p2 + lift(field.k22) * p2 * p2;
  const PhaseSpacePoly hamiltonian =
      PhaseSpacePoly(Rational(1, 2)) *
      (PhaseSpacePoly(metric_diagonal(sig, 0)) * p1 * p1 + PhaseSpacePoly(metric_diagonal(sig, 1)) * p2 * p2);

  PhaseSpacePoly bracket;
  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t q = i;
    const std::size_t p = i + 2;
    bracket += integral.derivative(q) * hamiltonian.derivative(p);
    bracket -= integral.derivative(p) * hamiltonian.derivative(q);
  }
  return bracket;
}

UnivariatePoly first_integral_along_geodesic(const KTParams& k, const Point2<Rational>& q0,
                                             const Point2<Rational>& velocity) {
  if (velocity.u.is_zero() && velocity.v.is_zero()) {
    throw std::invalid_argument("geodesic velocity must be nonzero");
  }
  const UnivariatePoly s = UnivariatePoly::variable(0);
  const std::array<UnivariatePoly, 2> path{UnivariatePoly(q0.u) + UnivariatePoly(velocity.u) * s,
                                           UnivariatePoly(q0.v) + UnivariatePoly(velocity.v) * s};
  const Rational m1 = metric_diagonal(k.signature, 0) * velocity.u;
  const Rational m2 = metric_diagonal(k.signature, 1) * velocity.v;
  const TensorField field = component_field(k);
  return field.k11.substitute<1>(path) * UnivariatePoly(m1 * m1) +
         field.k12.substitute<1>(path) * UnivariatePoly(Rational(2) * m1 * m2) +
         field.k22.substitute<1>(path) * UnivariatePoly(m2 * m2);
}

std::string_view to_string(EigenKind kind) {
  switch (kind) {
    case EigenKind::RealSimple:
      return "real-simple";
    case EigenKind::RealDouble:
      return "real-double";
    case EigenKind::ComplexPair:
      return "complex-pair";
  }
  return "?";
}

EigenReport eigenstructure_at(const KTParams& k, const Point2<double>& p, double relative_tolerance) {
  return eigenstructure_at(k.signature, k.to_doubles(), p, relative_tolerance);
}

EigenReport eigenstructure_at(Signature sig, const std::array<double, 6>& params, const Point2<double>& p,
                              double relative_tolerance) {
  const SymMatrix2<double> K = components_at(sig, params, p);
  const double g2 = sig == Signature::Euclidean ? 1.0 : -1.0;
  // K^i_j = K^im g_mj
  const double a = K.k11;
  const double b = K.k12 * g2;
  const double c = K.k12;
  const double d = K.k22 * g2;

  EigenReport report;
  const double trace = a + d;
  const double det = a * d - b * c;
  report.discriminant = trace * trace - 4.0 * det;
  const double scale = std::pow(std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d), 2);

  if (std::abs(report.discriminant) <= relative_tolerance * scale) {
    report.kind = EigenKind::RealDouble;
    report.lambda_plus = report.lambda_minus = trace / 2.0;
  } else if (report.discriminant < 0.0) {
    report.kind = EigenKind::ComplexPair;
    const double im = std::sqrt(-report.discriminant) / 2.0;
    report.lambda_plus = {trace / 2.0, im};
    report.lambda_minus = {trace / 2.0, -im};
  } else {
    report.kind = EigenKind::RealSimple;
    const double root = std::sqrt(report.discriminant);
    const double lp = (trace + root) / 2.0;
    const double lm = (trace - root) / 2.0;
    report.lambda_plus = lp;
    report.lambda_minus = lm;
    report.vector_plus = eigenvector(a, b, c, d, lp);
    report.vector_minus = eigenvector(a, b, c, d, lm);
  }
  return report;
}

BivariatePoly discriminant_poly(const KTParams& k) {
  const TensorField f = component_field(k);
  const BivariatePoly g1(metric_diagonal(k.signature, 0));
  const BivariatePoly g2(metric_diagonal(k.signature, 1));
  const BivariatePoly trace = f.k11 * g1 + f.k22 * g2;
  const BivariatePoly det = g1 * g2 * (f.k11 * f.k22 - f.k12 * f.k12);
  return trace * trace - BivariatePoly(4) * det;
}

double metric_product(Signature sig, const std::array<double, 2>& a, const std::array<double, 2>& b) {
  const double g2 = sig == Signature::Euclidean ? 1.0 : -1.0;
  return a[0] * b[0] + g2 * a[1] * b[1];
}

}  // namespace ktorbit
