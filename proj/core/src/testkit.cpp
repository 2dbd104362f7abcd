#include "ktorbit/testkit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <sstream>

namespace ktorbit {

namespace {

std::vector<std::size_t> mask_indices(unsigned mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i) {
    if ((mask & (1U << i)) != 0) out.push_back(i);
  }
  return out;
}

Rational nonzero_rational(Rng& rng, int max_num = 9, int max_den = 8) {
  for (;;) {
    Rational r = random_rational(rng, max_num, max_den);
    if (!r.is_zero()) return r;
  }
}

bool coin(Rng& rng) { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; }

KTParams zero_tensor(Signature sig) {
  KTParams k;
  k.signature = sig;
  return k;
}

// Places a gamma != 0 Minkowski tensor at prescribed values of Z+ and Z-.
KTParams minkowski_with_z(Rng& rng, const Rational& z_plus, const Rational& z_minus) {
  KTParams k = zero_tensor(Signature::Minkowski);
  k.gamma = nonzero_rational(rng);
  k.alpha = random_rational(rng);
  k.beta = random_rational(rng);
  k.A = random_rational(rng);
  const Rational d = k.alpha - k.beta;
  const Rational s = k.alpha + k.beta;
  const Rational minus_branch = (z_plus + d * d) / k.gamma;  // A + B - 2C
  const Rational plus_branch = (z_minus + s * s) / k.gamma;  // A + B + 2C
  const Rational sum = (minus_branch + plus_branch) / Rational(2);
  k.C = (plus_branch - minus_branch) / Rational(4);
  k.B = sum - k.A;
  return k;
}

Rational signed_nonzero(Rng& rng, int sign) {
  Rational r = nonzero_rational(rng).abs();
  return sign < 0 ? -r : r;
}

// Shape of one null-coordinate factor of the Minkowski discriminant.
enum class Shape { Zero, Definite, DoubleRoot, TwoRoots, OneRoot };

struct FactorShape {
  Shape shape;
  int sign;  // Definite: its sign; quadratics: sign of the leading coefficient
};

FactorShape factor_shape(const UnivariatePoly& p) {
  const Rational a = p.coefficient({2});
  const Rational b = p.coefficient({1});
  const Rational c = p.coefficient({0});
  if (p.is_zero()) return {Shape::Zero, 0};
  if (a.is_zero()) return b.is_zero() ? FactorShape{Shape::Definite, c.sign()} : FactorShape{Shape::OneRoot, 0};
  const Rational disc = b * b - Rational(4) * a * c;
  if (disc.sign() < 0) return {Shape::Definite, a.sign()};
  if (disc.is_zero()) return {Shape::DoubleRoot, a.sign()};
  return {Shape::TwoRoots, a.sign()};
}

std::optional<SingularKind> kind_from_factors(FactorShape x, FactorShape y) {
  if (static_cast<int>(x.shape) > static_cast<int>(y.shape)) std::swap(x, y);
  using S = Shape;
  if (x.shape == S::Zero) return SingularKind::WholePlane;
  if (x.shape == S::Definite) {
    switch (y.shape) {
      case S::Definite:
        return x.sign * y.sign > 0 ? SingularKind::Empty : SingularKind::WholePlane;
      case S::DoubleRoot:
        if (x.sign * y.sign > 0) return SingularKind::Line;
        return std::nullopt;
      case S::TwoRoots:
        if (x.sign * y.sign > 0) return SingularKind::Strip;
        return std::nullopt;
      case S::OneRoot:
        return SingularKind::HalfPlane;
      default:
        return std::nullopt;
    }
  }
  if (x.shape == S::DoubleRoot) {
    if (y.shape == S::DoubleRoot) return SingularKind::TwoOrthogonalLines;
    if (y.shape == S::TwoRoots && x.sign * y.sign > 0) return SingularKind::StripPlusOrthogonalLine;
    return std::nullopt;
  }
  if (x.shape == S::TwoRoots && y.shape == S::TwoRoots && x.sign * y.sign > 0) {
    return SingularKind::TwoStripsMinusIntersection;
  }
  if (x.shape == S::OneRoot && y.shape == S::OneRoot) return SingularKind::TwoOppositeQuadrants;
  return std::nullopt;
}

struct Sample {
  Rational s;  // x + t
  Rational w;  // x - t
  int sign;
};

// Negatives occupy exactly {c in [cmin, cmax]} (zeros allowed inside), and
// positives exist outside. With `touch_edge` the band must reach one end of
// the sampled range of c and not the other.
bool is_band(const std::vector<Sample>& samples, bool use_s, bool touch_edge) {
  auto coord = [&](const Sample& x) -> const Rational& { return use_s ? x.s : x.w; };
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  Rational gmin = coord(samples.front());
  Rational gmax = gmin;
  bool any_positive = false;
  for (const Sample& x : samples) {
    gmin = std::min(gmin, coord(x));
    gmax = std::max(gmax, coord(x));
    any_positive = any_positive || x.sign > 0;
    if (x.sign >= 0) continue;
    if (!lo || coord(x) < *lo) lo = coord(x);
    if (!hi || coord(x) > *hi) hi = coord(x);
  }
  if (!lo || !any_positive) return false;
  for (const Sample& x : samples) {
    if (coord(x) >= *lo && coord(x) <= *hi && x.sign > 0) return false;
  }
  if (touch_edge) return (*lo == gmin) != (*hi == gmax);
  return true;
}

double abs_scale(const KTParams& k) {
  double s = 1.0;
  for (double x : k.to_doubles()) s = std::max(s, std::abs(x));
  return s;
}

}  // namespace

std::size_t rank_oracle(const RatMatrix& m) {
  if (m.rows() > 6 || m.cols() > 6) throw OracleLimitError("rank_oracle is limited to 6x6 matrices");
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t size = limit; size > 0; --size) {
    for (unsigned rmask = 0; rmask < (1U << m.rows()); ++rmask) {
      if (static_cast<std::size_t>(std::popcount(rmask)) != size) continue;
      const auto rows = mask_indices(rmask);
      for (unsigned cmask = 0; cmask < (1U << m.cols()); ++cmask) {
        if (static_cast<std::size_t>(std::popcount(cmask)) != size) continue;
        const auto cols = mask_indices(cmask);
        std::vector<std::vector<Rational>> minor(size, std::vector<Rational>(size));
        for (std::size_t i = 0; i < size; ++i) {
          for (std::size_t j = 0; j < size; ++j) minor[i][j] = m(rows[i], cols[j]);
        }
        if (!cofactor_det(minor).is_zero()) return size;
      }
    }
  }
  return 0;
}

double generator_fd_check(const KTParams& k, GeneratorId id, double h, const GeneratorFn& fn) {
  if (!(h > 0.0 && h <= 0.1)) throw std::invalid_argument("finite-difference step must lie in (0, 0.1]");
  auto finite_parameter = [&](double s) -> double {
    switch (id) {
      case GeneratorId::V3:
        return k.signature == Signature::Euclidean ? std::tan(s / 2.0) : std::tanh(s / 2.0);
      case GeneratorId::V4:
      case GeneratorId::V6:
        return std::exp(s);
      default:
        return s;
    }
  };
  const auto plus = apply_finite(k, id, Rational::from_double(finite_parameter(h))).to_doubles();
  const auto minus = apply_finite(k, id, Rational::from_double(finite_parameter(-h))).to_doubles();
  const ParamVector expected = fn ? fn(id, k) : generator_vector(id, k);
  double worst = 0.0;
  for (std::size_t i = 0; i < 6; ++i) {
    const double derivative = (plus[i] - minus[i]) / (2.0 * h);
    worst = std::max(worst, std::abs(derivative - expected[i].to_double()));
  }
  return worst;
}

Rational random_rational(Rng& rng, int max_num, int max_den) {
  const long p = std::uniform_int_distribution<long>(-max_num, max_num)(rng);
  const long q = std::uniform_int_distribution<long>(1, max_den)(rng);
  return {p, q};
}

KTParams random_tensor(Rng& rng, Signature sig, int max_num, int max_den) {
  ParamVector v;
  for (Rational& x : v) x = random_rational(rng, max_num, max_den);
  return KTParams::from_vector(sig, v);
}

KTParams random_tensor_in_orbit(Rng& rng, OrbitLabel label) {
  const Signature sig = orbit_class(label).signature;
  KTParams k = zero_tensor(sig);
  switch (label) {
    case OrbitLabel::E1:
    case OrbitLabel::M1:
    case OrbitLabel::M2:
    case OrbitLabel::M3:
      if (sig == Signature::Euclidean) {
        do {
          k = random_tensor(rng, sig);
        } while (classify_label(k) != OrbitLabel::E1);
        return k;
      } else {
        const int zp = label == OrbitLabel::M3 ? -1 : 1;
        int zm = label == OrbitLabel::M1 ? 1 : -1;
        if (label == OrbitLabel::M2 && coin(rng)) return minkowski_with_z(rng, signed_nonzero(rng, -1),
                                                                          signed_nonzero(rng, 1));
        return minkowski_with_z(rng, signed_nonzero(rng, zp), signed_nonzero(rng, zm));
      }
    case OrbitLabel::E2:
      k.A = random_rational(rng);
      k.B = random_rational(rng);
      k.C = random_rational(rng);
      do {
        k.alpha = random_rational(rng);
        k.beta = random_rational(rng);
      } while (k.alpha.is_zero() && k.beta.is_zero());
      return k;
    case OrbitLabel::E3:
      k.gamma = nonzero_rational(rng);
      k.alpha = random_rational(rng);
      k.beta = random_rational(rng);
      k.A = random_rational(rng);
      k.B = k.A - (k.alpha * k.alpha - k.beta * k.beta) / k.gamma;
      k.C = -k.alpha * k.beta / k.gamma;
      return k;
    case OrbitLabel::E4:
      do {
        k.A = random_rational(rng);
        k.B = random_rational(rng);
        k.C = random_rational(rng);
      } while (k.A == k.B && k.C.is_zero());
      return k;
    case OrbitLabel::E5:
      k.A = k.B = nonzero_rational(rng);
      return k;
    case OrbitLabel::M4:
    case OrbitLabel::M5: {
      const Rational z = signed_nonzero(rng, label == OrbitLabel::M4 ? 1 : -1);
      return coin(rng) ? minkowski_with_z(rng, Rational(0), z) : minkowski_with_z(rng, z, Rational(0));
    }
    case OrbitLabel::M6:
      return minkowski_with_z(rng, Rational(0), Rational(0));
    case OrbitLabel::M7:
    case OrbitLabel::M8:
      k.A = random_rational(rng);
      k.B = random_rational(rng);
      k.C = random_rational(rng);
      do {
        k.alpha = random_rational(rng);
        k.beta = random_rational(rng);
      } while ((label == OrbitLabel::M7) ? !(k.alpha.abs() > k.beta.abs()) : !(k.beta.abs() > k.alpha.abs()));
      return k;
    case OrbitLabel::M9:
    case OrbitLabel::M10: {
      const int branch = coin(rng) ? 1 : -1;
      k.alpha = nonzero_rational(rng);
      k.beta = Rational(branch) * k.alpha;
      k.A = random_rational(rng);
      k.C = random_rational(rng);
      const Rational on_branch = Rational(2 * branch) * k.C - k.A;
      if (label == OrbitLabel::M10) {
        k.B = on_branch;
      } else {
        do {
          k.B = random_rational(rng);
        } while (k.B == on_branch);
      }
      return k;
    }
    case OrbitLabel::M11:
    case OrbitLabel::M12: {
      const int want = label == OrbitLabel::M11 ? 1 : -1;
      do {
        k.A = random_rational(rng);
        k.B = random_rational(rng);
        k.C = random_rational(rng);
      } while (mink_invariants(k).p_cart.sign() != want);
      return k;
    }
    case OrbitLabel::M13:
      k.C = nonzero_rational(rng);
      k.A = random_rational(rng);
      k.B = Rational(coin(rng) ? 2 : -2) * k.C - k.A;
      return k;
    case OrbitLabel::M14:
      k.A = nonzero_rational(rng);
      k.B = -k.A;
      return k;
  }
  return k;
}

KTParams random_float_tensor(Rng& rng, Signature sig) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ParamVector v;
  for (Rational& x : v) x = Rational::from_double(dist(rng));
  return KTParams::from_vector(sig, v);
}

GroupWord random_word(Rng& rng, Signature sig, std::size_t max_word) {
  GroupWord word;
  if (max_word == 0) return word;
  const std::size_t length = std::uniform_int_distribution<std::size_t>(1, max_word)(rng);
  const std::vector<DiscreteId> discrete =
      sig == Signature::Euclidean
          ? std::vector<DiscreteId>{DiscreteId::R0, DiscreteId::R1, DiscreteId::R2, DiscreteId::RSwap}
          : std::vector<DiscreteId>{DiscreteId::R0, DiscreteId::R1, DiscreteId::R2};
  const int kinds = 6 + static_cast<int>(discrete.size()) + 1;
  for (std::size_t i = 0; i < length; ++i) {
    const int pick = std::uniform_int_distribution<int>(0, kinds - 1)(rng);
    if (pick < 6) {
      const GeneratorId id = kAllGenerators[static_cast<std::size_t>(pick)];
      Rational t;
      switch (id) {
        case GeneratorId::V3:
          if (sig == Signature::Euclidean) {
            t = random_rational(rng);
          } else {
            const long q = std::uniform_int_distribution<long>(2, 8)(rng);
            t = Rational(std::uniform_int_distribution<long>(-(q - 1), q - 1)(rng), q);
          }
          break;
        case GeneratorId::V4:
          t = nonzero_rational(rng).abs();
          break;
        case GeneratorId::V6:
          t = nonzero_rational(rng);
          break;
        default:
          t = random_rational(rng);
          break;
      }
      word.emplace_back(FlowStep{id, t});
    } else if (pick < kinds - 1) {
      word.emplace_back(discrete[static_cast<std::size_t>(pick - 6)]);
    } else {
      word.emplace_back(HalfTurn{});
    }
  }
  return word;
}

FuzzReport fuzz_orbit_invariance(std::size_t n, std::size_t max_word, std::uint64_t rng_seed) {
  const auto start = std::chrono::steady_clock::now();
  FuzzReport report;
  report.trials = n;
  Rng rng(rng_seed);
  const auto labels = all_labels();
  for (std::size_t trial = 0; trial < n; ++trial) {
    const OrbitLabel label = labels[std::uniform_int_distribution<std::size_t>(0, labels.size() - 1)(rng)];
    const KTParams k = random_tensor_in_orbit(rng, label);
    const GroupWord word = random_word(rng, k.signature, max_word);
    const OrbitLabel before = classify_label(k);
    try {
      const OrbitLabel after = classify_label(apply_word(k, word));
      if (after != before) report.failures.push_back({k, word, before, after, {}});
    } catch (const std::exception& e) {
      report.failures.push_back({k, word, before, before, e.what()});
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<Point2<Rational>> census_grid(const RationalBox& box, std::size_t n) {
  if (n < 2) throw std::invalid_argument("census grid needs n >= 2");
  const Rational steps(static_cast<long>(n - 1));
  const Rational du = (box.u1 - box.u0) / steps;
  const Rational dv = (box.v1 - box.v0) / steps;
  std::vector<Point2<Rational>> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.push_back({box.u0 + du * Rational(i), box.v0 + dv * Rational(j)});
    }
  }
  return out;
}

DiscriminantCensus grid_discriminant_census(const KTParams& k, const RationalBox& box, std::size_t n) {
  const BivariatePoly disc = discriminant_poly(k);
  DiscriminantCensus census;
  for (const auto& p : census_grid(box, n)) {
    const std::array<Rational, 2> at{p.u, p.v};
    const int s = disc.evaluate(std::span<const Rational, 2>(at)).sign();
    if (s < 0) {
      ++census.negative;
    } else if (s == 0) {
      ++census.zero;
    } else {
      ++census.positive;
    }
  }
  return census;
}

ConsistencyResult check_singular_set(const KTParams& k, const RationalBox& box, std::size_t n) {
  ConsistencyResult result;
  auto fail = [&](const std::string& why) {
    if (result.ok) result.detail = why;
    result.ok = false;
  };
  const SingularSetDescription d = singular_set(k);
  const BivariatePoly disc = discriminant_poly(k);
  const std::string kind(to_string(d.kind));

  std::vector<Sample> samples;
  for (const auto& p : census_grid(box, n)) {
    const std::array<Rational, 2> at{p.u, p.v};
    const int s = disc.evaluate(std::span<const Rational, 2>(at)).sign();
    if (s < 0) {
      ++result.census.negative;
    } else if (s == 0) {
      ++result.census.zero;
    } else {
      ++result.census.positive;
    }
    if (predicted_discriminant_sign(d, p) != s) {
      fail(kind + ": predicted sign differs from the discriminant at (" + p.u.to_string() + ", " +
           p.v.to_string() + ")");
    }
    samples.push_back({p.v + p.u, p.v - p.u, s});
  }
  const DiscriminantCensus& c = result.census;

  if (k.signature == Signature::Minkowski) {
    // disc(u, v) = P(u + v) Q(v - u) as polynomials.
    const BivariatePoly u = BivariatePoly::variable(0);
    const BivariatePoly v = BivariatePoly::variable(1);
    const BivariatePoly product = d.factor_plus.substitute<2>({v + u}) * d.factor_minus.substitute<2>({v - u});
    if (product != disc) fail(kind + ": null-coordinate factors do not multiply to the discriminant");
    const auto implied = kind_from_factors(factor_shape(d.factor_plus), factor_shape(d.factor_minus));
    if (!implied || *implied != d.kind) {
      fail(kind + ": factor shapes imply " + (implied ? std::string(to_string(*implied)) : "no known variant"));
    }
    // Band shapes can only be read off the grid when every null line lies
    // well inside the sampled range and adjacent lines are grid-separated.
    const double h = std::max((box.u1 - box.u0).to_double(), (box.v1 - box.v0).to_double()) /
                     static_cast<double>(n - 1);
    const auto resolvable = [&](const std::vector<double>& roots, bool use_s) {
      double lo = 0.0;
      double hi = 0.0;
      for (std::size_t i = 0; i < samples.size(); ++i) {
        const double x = (use_s ? samples[i].s : samples[i].w).to_double();
        lo = i == 0 ? x : std::min(lo, x);
        hi = i == 0 ? x : std::max(hi, x);
      }
      for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i] < lo + 2.0 * h || roots[i] > hi - 2.0 * h) return false;
        if (i > 0 && roots[i] - roots[i - 1] <= 2.0 * h) return false;
      }
      return true;
    };
    const bool banded = d.kind == SingularKind::Strip || d.kind == SingularKind::StripPlusOrthogonalLine ||
                        d.kind == SingularKind::HalfPlane || d.kind == SingularKind::TwoStripsMinusIntersection ||
                        d.kind == SingularKind::TwoOppositeQuadrants;
    if (banded && !(resolvable(d.plus_roots, true) && resolvable(d.minus_roots, false))) {
      result.structure_checked = false;
      if (result.ok) result.detail = kind + ": null lines not resolvable on this grid; structure not checked";
      return result;
    }
    switch (d.kind) {
      case SingularKind::Empty:
        if (c.positive != samples.size()) fail("Empty: grid has non-positive samples");
        break;
      case SingularKind::WholePlane:
        if (c.positive != 0) fail("WholePlane: grid has positive samples");
        break;
      case SingularKind::Strip:
      case SingularKind::StripPlusOrthogonalLine:
        if (!is_band(samples, true, false) && !is_band(samples, false, false)) fail(kind + ": no single negative band");
        break;
      case SingularKind::HalfPlane:
        if (!is_band(samples, true, true) && !is_band(samples, false, true)) fail(kind + ": negatives are not a half-plane");
        break;
      case SingularKind::Line:
      case SingularKind::TwoOrthogonalLines:
        if (c.negative != 0) fail(kind + ": grid has negative samples");
        break;
      case SingularKind::TwoStripsMinusIntersection:
      case SingularKind::TwoOppositeQuadrants:
        if (c.negative == 0 || c.positive == 0 || is_band(samples, true, false) || is_band(samples, false, false)) {
          fail(kind + ": grid signs do not show two crossing sign changes");
        }
        break;
      default:
        fail(kind + ": not a Minkowski variant");
    }
    return result;
  }

  // Euclidean: the discriminant is a sum of squares.
  if (c.negative != 0) fail(kind + ": negative Euclidean discriminant");
  switch (d.kind) {
    case SingularKind::WholePlane:
      if (!disc.is_zero()) fail("WholePlane: discriminant is not identically zero");
      break;
    case SingularKind::Empty:
      if (disc.total_degree() != 0 || disc.constant_term().sign() <= 0) {
        fail("Empty: discriminant is not a positive constant");
      }
      break;
    case SingularKind::OnePoint:
    case SingularKind::TwoPoints: {
      const std::size_t expected = d.kind == SingularKind::OnePoint ? 1 : 2;
      if (d.approx_points.size() != expected) fail(kind + ": wrong number of points");
      for (const auto& p : d.exact_points) {
        const std::array<Rational, 2> at{p.u, p.v};
        if (!disc.evaluate(std::span<const Rational, 2>(at)).is_zero()) fail(kind + ": stored point is not singular");
      }
      const double tol = 1e-9 * std::pow(abs_scale(k), 2) * 100.0;
      for (const auto& p : d.approx_points) {
        const std::array<double, 2> at{p.u, p.v};
        if (std::abs(disc.evaluate(std::span<const double, 2>(at))) > tol) fail(kind + ": approximate point is not singular");
      }
      if (expected == 2 && d.approx_points[0] == d.approx_points[1]) fail("TwoPoints: points coincide");
      break;
    }
    default:
      fail(kind + ": not a Euclidean variant");
  }
  return result;
}

}  // namespace ktorbit
