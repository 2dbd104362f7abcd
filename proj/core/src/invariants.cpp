#include "ktorbit/invariants.hpp"

namespace ktorbit {

namespace {

void require(const KTParams& k, Signature sig) {
  if (k.signature != sig) {
    throw SignatureError("expected a " + std::string(to_string(sig)) + " tensor, got " +
                         std::string(to_string(k.signature)));
  }
}

}  // namespace

EuclideanInvariants euclid_invariants(const KTParams& k) {
  require(k, Signature::Euclidean);
  const Rational first = k.alpha * k.alpha - k.beta * k.beta - k.gamma * (k.A - k.B);
  const Rational second = k.alpha * k.beta + k.gamma * k.C;
  return {k.gamma, first * first + Rational(4) * second * second};
}

MinkowskiInvariants mink_invariants(const KTParams& k) {
  require(k, Signature::Minkowski);
  const Rational sum = k.A + k.B;
  const Rational two_c = Rational(2) * k.C;
  const Rational diff = k.alpha - k.beta;
  const Rational plus = k.alpha + k.beta;
  return {k.gamma, k.gamma * (sum - two_c) - diff * diff, k.gamma * (sum + two_c) - plus * plus,
          sum * sum - two_c * two_c};
}

SurfaceFlags surface_flags(const KTParams& k) {
  SurfaceFlags f;
  f.signature = k.signature;
  f.in_s1 = k.gamma.is_zero();
  if (k.signature == Signature::Euclidean) {
    f.in_s2 = k.alpha * k.alpha - k.beta * k.beta == k.gamma * (k.A - k.B) && k.alpha * k.beta == -k.gamma * k.C;
    f.in_s3 = k.alpha.is_zero() && k.beta.is_zero() && k.gamma.is_zero() && k.C.is_zero() && k.A == k.B;
    return f;
  }
  const MinkowskiInvariants inv = mink_invariants(k);
  f.in_b1 = inv.z_plus.is_zero();
  f.in_b2 = inv.z_minus.is_zero();
  f.in_s2 = f.in_b1 || f.in_b2;
  f.in_s3 = f.in_b1 && f.in_b2;
  const Rational two_c = Rational(2) * k.C;
  f.in_s4_c1 = f.in_s1 && k.alpha == k.beta && k.A + k.B == two_c;
  f.in_s4_c2 = f.in_s1 && k.alpha == -k.beta && k.A + k.B == -two_c;
  f.in_s5 = f.in_s4_c1 && f.in_s4_c2;
  return f;
}

}  // namespace ktorbit
