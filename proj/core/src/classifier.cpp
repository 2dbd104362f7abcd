#include "ktorbit/classifier.hpp"

#include <array>
#include <string>

#include "ktorbit/group_actions.hpp"

namespace ktorbit {

namespace {

constexpr std::array<OrbitLabel, 19> kLabels{
    OrbitLabel::E1, OrbitLabel::E2,  OrbitLabel::E3,  OrbitLabel::E4,  OrbitLabel::E5,
    OrbitLabel::M1, OrbitLabel::M2,  OrbitLabel::M3,  OrbitLabel::M4,  OrbitLabel::M5,
    OrbitLabel::M6, OrbitLabel::M7,  OrbitLabel::M8,  OrbitLabel::M9,  OrbitLabel::M10,
    OrbitLabel::M11, OrbitLabel::M12, OrbitLabel::M13, OrbitLabel::M14};

constexpr std::array<std::string_view, 19> kNames{"E1", "E2", "E3",  "E4",  "E5",  "M1",  "M2",
                                                  "M3", "M4", "M5",  "M6",  "M7",  "M8",  "M9",
                                                  "M10", "M11", "M12", "M13", "M14"};

const std::array<OrbitClass, 19>& table() {
  using S = Signature;
  using L = OrbitLabel;
  static const std::array<OrbitClass, 19> classes{{
      {L::E1, S::Euclidean, "elliptic-hyperbolic coordinates", {}, 6, true},
      {L::E2, S::Euclidean, "parabolic coordinates", {}, 5, true},
      {L::E3, S::Euclidean, "polar coordinates", {}, 4, true},
      {L::E4, S::Euclidean, "Cartesian coordinates", {}, 3, true},
      {L::E5, S::Euclidean, "multiples of the metric", {}, 1, false},
      {L::M1, S::Minkowski, "elliptic coordinates of type I", {"SC9"}, 6, true},
      {L::M2, S::Minkowski, "hyperbolic coordinates of type I", {"SC8"}, 6, true},
      {L::M3, S::Minkowski, "elliptic coordinates of type II", {"SC5", "SC10"}, 6, true},
      {L::M4, S::Minkowski, "hyperbolic coordinates of type II", {"SC6"}, 5, true},
      {L::M5, S::Minkowski, "hyperbolic coordinates of type III", {"SC7"}, 5, true},
      {L::M6, S::Minkowski, "polar coordinates", {"SC2"}, 4, true},
      {L::M7, S::Minkowski, "parabolic coordinates of type I (first web)", {"SC4"}, 5, true},
      {L::M8, S::Minkowski, "parabolic coordinates of type I (second web)", {"SC4"}, 5, true},
      {L::M9, S::Minkowski, "parabolic coordinates of type II", {"SC3"}, 4, true},
      {L::M10, S::Minkowski, "no characteristic tensors", {}, 3, false},
      {L::M11, S::Minkowski, "Cartesian coordinates", {"SC1"}, 3, true},
      {L::M12, S::Minkowski, "no characteristic tensors", {}, 3, false},
      {L::M13, S::Minkowski, "no characteristic tensors", {}, 2, false},
      {L::M14, S::Minkowski, "multiples of the metric", {}, 1, false},
  }};
  return classes;
}

OrbitLabel classify_euclidean(const KTParams& k) {
  const EuclideanInvariants inv = euclid_invariants(k);
  if (!inv.gamma.is_zero()) return inv.delta.is_zero() ? OrbitLabel::E3 : OrbitLabel::E1;
  if (!k.alpha.is_zero() || !k.beta.is_zero()) return OrbitLabel::E2;
  const Rational diff = k.A - k.B;
  if (!(diff * diff + Rational(4) * k.C * k.C).is_zero()) return OrbitLabel::E4;
  return OrbitLabel::E5;
}

OrbitLabel classify_minkowski(const KTParams& k) {
  const MinkowskiInvariants inv = mink_invariants(k);
  if (!inv.gamma.is_zero()) {
    const int zp = inv.z_plus.sign();
    const int zm = inv.z_minus.sign();
    if (zp > 0 && zm > 0) return OrbitLabel::M1;
    if (zp * zm < 0) return OrbitLabel::M2;
    if (zp < 0 && zm < 0) return OrbitLabel::M3;
    if (zp == 0 && zm == 0) return OrbitLabel::M6;
    return zp + zm > 0 ? OrbitLabel::M4 : OrbitLabel::M5;
  }
  const Rational a2 = k.alpha * k.alpha;
  const Rational b2 = k.beta * k.beta;
  if (a2 != b2) return a2 > b2 ? OrbitLabel::M7 : OrbitLabel::M8;
  if (!k.alpha.is_zero()) {
    const Rational two_c = Rational(2) * k.C;
    const bool on_branch = k.alpha == k.beta ? k.A + k.B == two_c : k.A + k.B == -two_c;
    return on_branch ? OrbitLabel::M10 : OrbitLabel::M9;
  }
  const int p = inv.p_cart.sign();
  if (p > 0) return OrbitLabel::M11;
  if (p < 0) return OrbitLabel::M12;
  if (!(k.A + k.B).is_zero() || !k.C.is_zero()) return OrbitLabel::M13;
  return OrbitLabel::M14;
}

KTParams make(Signature sig, long a, long b, long c, long alpha, long beta, long gamma) {
  return KTParams::from_vector(sig, {Rational(a), Rational(b), Rational(c), Rational(alpha), Rational(beta),
                                     Rational(gamma)});
}

}  // namespace

std::string_view to_string(OrbitLabel label) { return kNames[static_cast<std::size_t>(label)]; }

std::optional<OrbitLabel> parse_label(std::string_view text) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == text) return kLabels[i];
  }
  return std::nullopt;
}

const OrbitClass& orbit_class(OrbitLabel label) { return table()[static_cast<std::size_t>(label)]; }

std::span<const OrbitLabel> all_labels(Signature sig) {
  if (sig == Signature::Euclidean) return std::span<const OrbitLabel>(kLabels).first(5);
  return std::span<const OrbitLabel>(kLabels).subspan(5);
}

std::span<const OrbitLabel> all_labels() { return kLabels; }

OrbitLabel classify_label(const KTParams& k) {
  return k.signature == Signature::Euclidean ? classify_euclidean(k) : classify_minkowski(k);
}

ClassificationReport classify(const KTParams& k) {
  ClassificationReport report;
  report.orbit = &orbit_class(classify_label(k));
  if (k.signature == Signature::Euclidean) {
    report.invariants = euclid_invariants(k);
  } else {
    report.invariants = mink_invariants(k);
  }
  report.surfaces = surface_flags(k);
  report.rank = generator_rank(k);
  report.is_zero = k.is_zero();
  report.singular_set = singular_set(k);
  return report;
}

bool same_orbit(const KTParams& k1, const KTParams& k2) {
  if (k1.signature != k2.signature) {
    throw SignatureError("cannot compare a " + std::string(to_string(k1.signature)) + " tensor with a " +
                         std::string(to_string(k2.signature)) + " tensor");
  }
  return classify_label(k1) == classify_label(k2);
}

std::vector<KTParams> representatives(OrbitLabel label) {
  constexpr Signature E = Signature::Euclidean;
  constexpr Signature M = Signature::Minkowski;
  switch (label) {
    case OrbitLabel::E1:
      return {make(E, 0, 0, 1, 0, 0, 1)};
    case OrbitLabel::E2:
      return {make(E, 0, 0, 0, 1, 0, 0), make(E, 0, 0, 0, 0, 1, 0)};
    case OrbitLabel::E3:
      return {make(E, 0, 0, 0, 0, 0, 1)};
    case OrbitLabel::E4:
      return {make(E, 1, 0, 0, 0, 0, 0), make(E, 0, 1, 0, 0, 0, 0), make(E, 0, 0, 1, 0, 0, 0)};
    case OrbitLabel::E5:
      return {metric_tensor(E)};
    case OrbitLabel::M1:
      return {make(M, 0, 1, 0, 0, 0, 1)};
    case OrbitLabel::M2:
      return {make(M, 0, 0, 1, 0, 0, 1)};
    case OrbitLabel::M3:
      return {make(M, 0, -1, 0, 0, 0, 1)};
    case OrbitLabel::M4:
      return {make(M, 1, 1, 1, 0, 0, 1), make(M, 1, 1, -1, 0, 0, 1)};
    case OrbitLabel::M5:
      return {make(M, -1, -1, -1, 0, 0, 1), make(M, -1, -1, 1, 0, 0, 1)};
    case OrbitLabel::M6:
      return {make(M, 0, 0, 0, 0, 0, 1)};
    case OrbitLabel::M7:
      return {make(M, 0, 0, 0, 1, 0, 0)};
    case OrbitLabel::M8:
      return {make(M, 0, 0, 0, 0, 1, 0)};
    case OrbitLabel::M9:
      return {make(M, 1, 1, 0, 1, 1, 0), make(M, 1, 1, -1, 1, 1, 0)};
    case OrbitLabel::M10:
      return {make(M, 0, 0, 0, 1, 1, 0)};
    case OrbitLabel::M11:
      return {make(M, 1, 0, 0, 0, 0, 0)};
    case OrbitLabel::M12:
      return {make(M, 0, 0, 1, 0, 0, 0)};
    case OrbitLabel::M13:
      return {make(M, 1, 1, 1, 0, 0, 0)};
    case OrbitLabel::M14:
      return {metric_tensor(M)};
  }
  return {};
}

}  // namespace ktorbit
