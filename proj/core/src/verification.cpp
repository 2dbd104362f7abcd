#include <sstream>

#include "ktorbit/testkit.hpp"

namespace ktorbit {

namespace {

const RationalBox kCensusBox{Rational(-3), Rational(3), Rational(-3), Rational(3)};
constexpr std::size_t kCensusPoints = 21;
constexpr std::size_t kFlowSamples = 10;
constexpr double kFlowStep = 1e-3;
constexpr double kFlowTolerance = 1e-5;
constexpr std::size_t kMaxWord = 8;

CheckResult check_closure(const GeneratorFn& fn) {
  CheckResult r{"lie-closure", true, {}};
  std::size_t count = 0;
  for (Signature sig : {Signature::Euclidean, Signature::Minkowski}) {
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = i + 1; j < 6; ++j) {
        ++count;
        if (!lie_bracket_decompose(kAllGenerators[i], kAllGenerators[j], sig, fn)) {
          r.passed = false;
          r.detail = "[" + std::string(to_string(kAllGenerators[i])) + "," +
                     std::string(to_string(kAllGenerators[j])) + "] has no constant decomposition (" +
                     std::string(to_string(sig)) + ")";
          return r;
        }
      }
    }
  }
  r.detail = std::to_string(count) + " brackets decompose";
  return r;
}

CheckResult check_flows(std::uint64_t seed, const GeneratorFn& fn) {
  CheckResult r{"flow-consistency", true, {}};
  Rng rng(seed);
  double worst = 0.0;
  for (Signature sig : {Signature::Euclidean, Signature::Minkowski}) {
    for (std::size_t n = 0; n < kFlowSamples; ++n) {
      const KTParams k = random_float_tensor(rng, sig);
      for (GeneratorId id : kAllGenerators) {
        const double err = generator_fd_check(k, id, kFlowStep, fn);
        worst = std::max(worst, err);
        if (!(err < kFlowTolerance) && r.passed) {
          r.passed = false;
          r.detail = std::string(to_string(id)) + " (" + std::string(to_string(sig)) +
                     ") derivative error " + std::to_string(err);
        }
      }
    }
  }
  if (r.passed) {
    std::ostringstream os;
    os << "max error " << worst << " at h=" << kFlowStep;
    r.detail = os.str();
  }
  return r;
}

CheckResult check_fuzz(std::size_t trials, std::uint64_t seed) {
  CheckResult r{"orbit-invariance", true, {}};
  if (trials == 0) {
    r.detail = "skipped";
    return r;
  }
  const FuzzReport report = fuzz_orbit_invariance(trials, kMaxWord, seed);
  r.passed = report.passed();
  std::ostringstream os;
  if (!r.passed) {
    const FuzzFailure& f = report.failures.front();
    os << report.failures.size() << " failures; first: " << f.seed.to_string() << " under " << to_string(f.word)
       << ": " << to_string(f.before) << " -> " << to_string(f.after);
    if (!f.error.empty()) os << " (" << f.error << ")";
  } else {
    os << trials << " trials in " << report.elapsed.count() << " s";
  }
  r.detail = os.str();
  return r;
}

CheckResult check_atlas() {
  CheckResult r{"atlas", true, {}};
  std::size_t count = 0;
  for (OrbitLabel label : all_labels()) {
    for (const KTParams& k : representatives(label)) {
      ++count;
      const OrbitLabel got = classify_label(k);
      if (got != label && r.passed) {
        r.passed = false;
        r.detail = k.to_string() + " classified " + std::string(to_string(got)) + ", expected " +
                   std::string(to_string(label));
      }
    }
  }
  if (r.passed) r.detail = std::to_string(count) + " representatives";
  return r;
}

CheckResult check_ranks(const GeneratorFn& fn) {
  CheckResult r{"rank-table", true, {}};
  for (OrbitLabel label : all_labels()) {
    for (const KTParams& k : representatives(label)) {
      const RatMatrix m = generator_matrix(k, fn);
      const std::size_t rank = rat_rank(m);
      const std::size_t oracle = rank_oracle(m);
      const std::size_t expected = orbit_class(label).expected_rank;
      if ((rank != expected || oracle != expected) && r.passed) {
        r.passed = false;
        r.detail = std::string(to_string(label)) + ": rank " + std::to_string(rank) + ", oracle " +
                   std::to_string(oracle) + ", expected " + std::to_string(expected);
      }
    }
  }
  if (r.passed) r.detail = "all representatives match";
  return r;
}

CheckResult check_singular_sets() {
  CheckResult r{"singular-sets", true, {}};
  for (OrbitLabel label : all_labels()) {
    for (const KTParams& k : representatives(label)) {
      const ConsistencyResult c = check_singular_set(k, kCensusBox, kCensusPoints);
      if (!c.ok && r.passed) {
        r.passed = false;
        r.detail = std::string(to_string(label)) + ": " + c.detail;
      }
    }
  }
  if (r.passed) r.detail = "grid census agrees with every representative";
  return r;
}

}  // namespace

VerificationSummary run_verification(std::size_t trials, std::uint64_t seed, const GeneratorFn& fn) {
  VerificationSummary summary;
  summary.checks.push_back(check_closure(fn));
  summary.checks.push_back(check_flows(seed, fn));
  summary.checks.push_back(check_fuzz(trials, seed));
  summary.checks.push_back(check_atlas());
  summary.checks.push_back(check_ranks(fn));
  summary.checks.push_back(check_singular_sets());
  return summary;
}

}  // namespace ktorbit
