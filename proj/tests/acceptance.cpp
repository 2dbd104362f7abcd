// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ktorbit/classifier.hpp"
#include "ktorbit/group_actions.hpp"
#include "ktorbit/testkit.hpp"
#include "ktorbit/webs.hpp"

using namespace ktorbit;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

std::vector<std::pair<OrbitLabel, KTParams>> atlas() {
  std::vector<std::pair<OrbitLabel, KTParams>> out;
  for (OrbitLabel l : all_labels()) {
    for (const KTParams& k : representatives(l)) out.emplace_back(l, k);
  }
  return out;
}

Outcome representative_atlas() {
  const auto start = Clock::now();
  const auto entries = atlas();
  for (const auto& [label, k] : entries) {
    if (classify(k).label() != label) return fail(k.to_string() + " is not " + std::string(to_string(label)));
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (seconds >= 1.0) return fail("took " + std::to_string(seconds) + " s");
  return {true, std::to_string(entries.size()) + " tensors in " + std::to_string(seconds) + " s"};
}

Outcome rank_table() {
  const std::map<OrbitLabel, std::size_t> expected{
      {OrbitLabel::E1, 6},  {OrbitLabel::E2, 5},  {OrbitLabel::E3, 4},  {OrbitLabel::E4, 3},  {OrbitLabel::E5, 1},
      {OrbitLabel::M1, 6},  {OrbitLabel::M2, 6},  {OrbitLabel::M3, 6},  {OrbitLabel::M4, 5},  {OrbitLabel::M5, 5},
      {OrbitLabel::M6, 4},  {OrbitLabel::M7, 5},  {OrbitLabel::M8, 5},  {OrbitLabel::M9, 4},  {OrbitLabel::M10, 3},
      {OrbitLabel::M11, 3}, {OrbitLabel::M12, 3}, {OrbitLabel::M13, 2}, {OrbitLabel::M14, 1}};
  std::size_t n = 0;
  for (const auto& [label, k] : atlas()) {
    const std::size_t rank = generator_rank(k);
    const std::size_t oracle = rank_oracle(generator_matrix(k));
    if (rank != expected.at(label) || oracle != rank) {
      return fail(std::string(to_string(label)) + " rank " + std::to_string(rank) + ", oracle " +
                  std::to_string(oracle) + ", expected " + std::to_string(expected.at(label)));
    }
    ++n;
  }
  return {true, std::to_string(n) + " representatives"};
}

Outcome determinant_formulas() {
  const auto var = [](std::size_t i) { return ParamPoly::variable(i); };
  const auto A = var(kA), B = var(kB), C = var(kC), a = var(kAlpha), b = var(kBeta), g = var(kGamma);
  const auto two = ParamPoly(2);
  const auto p = a * a - b * b - g * (A - B);
  const auto q = a * b + g * C;
  const auto delta = p * p + ParamPoly(4) * q * q;
  const auto zp = g * (A + B - two * C) - (a - b).pow(2);
  const auto zm = g * (A + B + two * C) - (a + b).pow(2);

  for (Signature sig : {Signature::Euclidean, Signature::Minkowski}) {
    std::vector<std::vector<ParamPoly>> rows;
    for (GeneratorId id : kAllGenerators) {
      const VectorField6 f = generator_field(id, sig);
      rows.emplace_back(f.begin(), f.end());
    }
    const ParamPoly det = cofactor_det(rows);
    const ParamPoly expected = sig == Signature::Euclidean ? ParamPoly(-2) * g * delta : two * g * zp * zm;
    if (det != expected) return fail(std::string(to_string(sig)) + " determinant differs");
  }
  return {true, "-2 gamma delta and 2 gamma Z+ Z- hold identically"};
}

Outcome lie_closure() {
  std::size_t decomposed = 0;
  for (Signature sig : {Signature::Euclidean, Signature::Minkowski}) {
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = i + 1; j < 6; ++j) {
        const auto first = lie_bracket_decompose(kAllGenerators[i], kAllGenerators[j], sig);
        const auto again = lie_bracket_decompose(kAllGenerators[i], kAllGenerators[j], sig);
        if (!first) {
          return fail(std::string(to_string(sig)) + " [" + std::string(to_string(kAllGenerators[i])) + "," +
                      std::string(to_string(kAllGenerators[j])) + "] does not decompose");
        }
        if (first != again) return fail("structure constants not reproducible");
        VectorField6 sum{};
        for (std::size_t k = 0; k < 6; ++k) {
          const VectorField6 f = generator_field(kAllGenerators[k], sig);
          for (std::size_t n = 0; n < 6; ++n) sum[n] += ParamPoly((*first)[k]) * f[n];
        }
        if (sum != lie_bracket(generator_field(kAllGenerators[i], sig), generator_field(kAllGenerators[j], sig))) {
          return fail("decomposition does not reproduce the bracket");
        }
        ++decomposed;
      }
    }
  }
  return {true, std::to_string(decomposed) + " brackets closed"};
}

Outcome flow_consistency() {
  Rng rng(20240501);
  double worst = 0.0;
  double ratio_lo = 1e300;
  double ratio_hi = 0.0;
  std::size_t ratio_count = 0;
  for (Signature sig : {Signature::Euclidean, Signature::Minkowski}) {
    for (int i = 0; i < 100; ++i) {
      const KTParams k = random_float_tensor(rng, sig);
      for (GeneratorId id : kAllGenerators) {
        const double fine = generator_fd_check(k, id, 1e-3);
        const double coarse = generator_fd_check(k, id, 1e-2);
        worst = std::max(worst, fine);
        if (fine >= 1e-5) return fail(std::string(to_string(id)) + " error " + std::to_string(fine));
        // Flows polynomial of degree <= 2 in the parameter have no truncation
        // error; the ratio is only meaningful where one is present.
        if (coarse > 1e-9) {
          const double ratio = coarse / fine;
          ratio_lo = std::min(ratio_lo, ratio);
          ratio_hi = std::max(ratio_hi, ratio);
          ++ratio_count;
          if (ratio < 50.0 || ratio > 200.0) {
            return fail(std::string(to_string(id)) + " ratio " + std::to_string(ratio) + " at " + k.to_string());
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << "max error " << worst << " at h=1e-3; ratio in [" << ratio_lo << ", " << ratio_hi << "] over "
     << ratio_count << " checks";
  return {true, os.str()};
}

Outcome orbit_invariance() {
  const FuzzReport r = fuzz_orbit_invariance(1000, 8, 42);
  if (!r.passed()) {
    const FuzzFailure& f = r.failures.front();
    return fail(std::to_string(r.failures.size()) + " failures, first " + f.seed.to_string() + " under " +
                to_string(f.word) + (f.error.empty() ? "" : ": " + f.error));
  }
  if (r.elapsed.count() >= 30.0) return fail("took " + std::to_string(r.elapsed.count()) + " s");
  return {true, std::to_string(r.trials) + " words, 0 failures, " + std::to_string(r.elapsed.count()) + " s"};
}

Outcome invariant_covariance() {
  Rng rng(777);
  for (int i = 0; i < 200; ++i) {
    const Rational c = random_rational(rng).abs() + Rational(1, 4);
    Rational lambda = random_rational(rng);
    if (lambda.is_zero()) lambda = Rational(-2, 3);

    const KTParams e = random_tensor(rng, Signature::Euclidean);
    const auto ie = euclid_invariants(e);
    const auto de = euclid_invariants(apply_finite(e, GeneratorId::V4, c));
    const auto se = euclid_invariants(apply_finite(e, GeneratorId::V6, lambda));
    if (de != EuclideanInvariants{ie.gamma, c.pow(4) * ie.delta}) return fail("dilatation " + e.to_string());
    if (se != EuclideanInvariants{lambda * ie.gamma, lambda.pow(4) * ie.delta}) return fail("scaling " + e.to_string());

    const KTParams m = random_tensor(rng, Signature::Minkowski);
    const auto im = mink_invariants(m);
    const auto dm = mink_invariants(apply_finite(m, GeneratorId::V4, c));
    const auto sm = mink_invariants(apply_finite(m, GeneratorId::V6, lambda));
    if (dm.gamma != im.gamma || dm.z_plus != c.pow(2) * im.z_plus || dm.z_minus != c.pow(2) * im.z_minus) {
      return fail("dilatation " + m.to_string());
    }
    if (sm.gamma != lambda * im.gamma || sm.z_plus != lambda.pow(2) * im.z_plus ||
        sm.z_minus != lambda.pow(2) * im.z_minus) {
      return fail("scaling " + m.to_string());
    }
  }
  return {true, "200 cases per signature, exact"};
}

Outcome killing_verification() {
  Rng rng(8080);
  for (int i = 0; i < 200; ++i) {
    const KTParams k = random_tensor(rng, i % 2 == 0 ? Signature::Euclidean : Signature::Minkowski);
    if (!poisson_bracket_with_H(component_field(k), k.signature).is_zero()) return fail("bracket nonzero " + k.to_string());
  }
  std::uniform_int_distribution<int> power(0, 2);
  for (int i = 0; i < 50; ++i) {
    const KTParams k = random_tensor(rng, i % 2 == 0 ? Signature::Euclidean : Signature::Minkowski);
    Rational c = random_rational(rng);
    if (c.is_zero()) c = 1;
    TensorField f = component_field(k);
    // K^11 may not depend on u and K^22 may not depend on v.
    const auto u = BivariatePoly::variable(0);
    const auto v = BivariatePoly::variable(1);
    const auto extra = static_cast<unsigned>(power(rng));
    if (i % 4 < 2) {
      f.k11 += BivariatePoly(c) * u * v.pow(extra);
    } else {
      f.k22 += BivariatePoly(c) * v * u.pow(extra);
    }
    if (poisson_bracket_with_H(f, k.signature).is_zero()) return fail("perturbed field passed as Killing");
  }
  for (int i = 0; i < 100; ++i) {
    const KTParams k = random_tensor(rng, i % 2 == 0 ? Signature::Euclidean : Signature::Minkowski);
    Point2<Rational> vel{random_rational(rng), random_rational(rng)};
    if (vel.u.is_zero() && vel.v.is_zero()) vel.v = 1;
    const auto along = first_integral_along_geodesic(k, {random_rational(rng), random_rational(rng)}, vel);
    if (along.total_degree() > 0) return fail("first integral varies for " + k.to_string());
  }
  return {true, "200 Killing, 50 perturbed, 100 geodesics"};
}

// The negative grid points of the M2 representative form one band of
// consecutive values of x - t, and the band is full.
bool single_negative_band(const KTParams& k, const RationalBox& box, std::size_t n) {
  const BivariatePoly disc = discriminant_poly(k);
  std::map<Rational, std::pair<std::size_t, std::size_t>> by_w;  // w -> (negative, total)
  for (const auto& p : census_grid(box, n)) {
    const std::array<Rational, 2> at{p.u, p.v};
    auto& slot = by_w[p.v - p.u];
    slot.second += 1;
    if (disc.evaluate(std::span<const Rational, 2>(at)).sign() < 0) slot.first += 1;
  }
  int runs = 0;
  bool inside = false;
  for (const auto& [w, counts] : by_w) {
    const bool negative = counts.first > 0;
    if (negative && counts.first != counts.second) return false;
    if (negative && !inside) ++runs;
    inside = negative;
  }
  return runs == 1;
}

Outcome singular_taxonomy() {
  const RationalBox box{-3, 3, -3, 3};
  const std::size_t n = 21;
  const std::size_t total = n * n;
  for (const auto& [label, k] : atlas()) {
    const ConsistencyResult r = check_singular_set(k, box, n);
    if (!r.ok) return fail(std::string(to_string(label)) + ": " + r.detail);
    if (!r.structure_checked) return fail(std::string(to_string(label)) + ": band structure not resolved on the grid");
    const DiscriminantCensus& c = r.census;
    switch (label) {
      case OrbitLabel::M1:
      case OrbitLabel::M11:
        if (c.positive != total) return fail(std::string(to_string(label)) + " not all positive");
        break;
      case OrbitLabel::M12:
        if (c.negative != total) return fail("M12 not all negative");
        break;
      case OrbitLabel::M10:
      case OrbitLabel::M13:
      case OrbitLabel::M14:
      case OrbitLabel::E5:
        if (c.zero != total) return fail(std::string(to_string(label)) + " not all zero");
        break;
      case OrbitLabel::M2:
        if (!single_negative_band(k, box, n)) return fail("M2 negative set is not one band");
        break;
      default:
        break;
    }
  }
  return {true, "all representatives consistent on the 21x21 grid of [-3,3]^2"};
}

Outcome swap_symmetry() {
  for (const auto& [label, k] : atlas()) {
    OrbitLabel expected = label;
    if (label == OrbitLabel::M7) expected = OrbitLabel::M8;
    if (label == OrbitLabel::M8) expected = OrbitLabel::M7;
    const OrbitLabel got = classify_label(apply_discrete(k, DiscreteId::RSwap));
    if (got != expected) return fail(std::string(to_string(label)) + " -> " + std::string(to_string(got)));
  }
  // Characteristic Minkowski webs up to the swap.
  std::set<OrbitLabel> classes;
  for (OrbitLabel l : all_labels(Signature::Minkowski)) {
    if (!orbit_class(l).characteristic) continue;
    const OrbitLabel image = classify_label(apply_discrete(representatives(l).front(), DiscreteId::RSwap));
    classes.insert(std::min(l, image));
  }
  if (classes.size() != 9) return fail(std::to_string(classes.size()) + " web types modulo the swap");
  return {true, "M7<->M8, others fixed; 9 web types modulo the swap"};
}

Outcome web_rendering() {
  std::size_t webs = 0;
  std::size_t vertices = 0;
  double worst = 0.0;
  const WebRenderConfig cfg;
  for (OrbitLabel l : all_labels()) {
    if (!orbit_class(l).characteristic) continue;
    const KTParams k = representatives(l).front();
    const WebDocument doc = trace_web(k, cfg);
    if (doc.foliation_solid.empty() || doc.foliation_dashed.empty()) {
      return fail(std::string(to_string(l)) + " produced an empty web");
    }
    for (const auto* family : {&doc.foliation_solid, &doc.foliation_dashed}) {
      for (const Polyline& line : *family) {
        for (std::size_t i = 1; i + 1 < line.size(); ++i) {
          const auto d = eigen_directions(k, line[i], cfg.singular_tol);
          if (!d) continue;
          const double g = std::abs(metric_product(k.signature, d->first, d->second));
          worst = std::max(worst, g);
          ++vertices;
          if (g >= 1e-6) return fail(std::string(to_string(l)) + " |g(u,w)| = " + std::to_string(g));
        }
      }
    }
    if (render_svg(doc, cfg) != render_svg(trace_web(k, cfg), cfg)) {
      return fail(std::string(to_string(l)) + " SVG not reproducible");
    }
    ++webs;
  }
  if (webs != 14) return fail(std::to_string(webs) + " characteristic classes");
  std::ostringstream os;
  os << webs << " webs, " << vertices << " vertices, max |g(u,w)| " << worst;
  return {true, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"representative atlas", representative_atlas},
      {"rank table", rank_table},
      {"determinant formulas", determinant_formulas},
      {"lie closure", lie_closure},
      {"flow consistency", flow_consistency},
      {"orbit invariance", orbit_invariance},
      {"invariant covariance", invariant_covariance},
      {"killing verification", killing_verification},
      {"singular-set taxonomy", singular_taxonomy},
      {"swap symmetry", swap_symmetry},
      {"web rendering", web_rendering},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << index << "] " << name << ": " << o.detail << '\n';
    if (!o.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
