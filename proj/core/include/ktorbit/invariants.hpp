#pragma once

#include "ktorbit/killing_tensor.hpp"

namespace ktorbit {

/// Fundamental invariants of a Euclidean Killing tensor.
/// delta = (alpha^2 - beta^2 - gamma(A - B))^2 + 4(alpha beta + gamma C)^2 >= 0.
struct EuclideanInvariants {
  Rational gamma;
  Rational delta;
  friend bool operator==(const EuclideanInvariants&, const EuclideanInvariants&) = default;
};

/// Fundamental invariants of a Minkowski Killing tensor.
///   z_plus  = gamma(A + B - 2C) - (alpha - beta)^2
///   z_minus = gamma(A + B + 2C) - (alpha + beta)^2
///   p_cart  = (A + B)^2 - 4C^2   (sign separates the two constant-tensor orbits)
struct MinkowskiInvariants {
  Rational gamma;
  Rational z_plus;
  Rational z_minus;
  Rational p_cart;
  friend bool operator==(const MinkowskiInvariants&, const MinkowskiInvariants&) = default;
};

/// Throws SignatureError unless k is Euclidean.
EuclideanInvariants euclid_invariants(const KTParams& k);
/// Throws SignatureError unless k is Minkowski.
MinkowskiInvariants mink_invariants(const KTParams& k);

/// Exact membership in the distinguished surfaces of the parameter space.
/// Only the flags meaningful for `signature` are ever set.
///
/// Euclidean: S1 gamma = 0; S2 both alpha^2 - beta^2 = gamma(A - B) and
/// alpha beta = -gamma C; S3 alpha = beta = gamma = C = 0, A = B.
/// Minkowski: S1 gamma = 0; B1 z_plus = 0; B2 z_minus = 0; S2 = B1 u B2;
/// S3 = B1 n B2; C1/C2 the two branches of S4; S5 = C1 n C2.
struct SurfaceFlags {
  Signature signature = Signature::Euclidean;
  bool in_s1 = false;
  bool in_s2 = false;
  bool in_s3 = false;
  bool in_b1 = false;
  bool in_b2 = false;
  bool in_s4_c1 = false;
  bool in_s4_c2 = false;
  bool in_s5 = false;

  [[nodiscard]] bool in_s4() const { return in_s4_c1 || in_s4_c2; }
  friend bool operator==(const SurfaceFlags&, const SurfaceFlags&) = default;
};

SurfaceFlags surface_flags(const KTParams& k);

}  // namespace ktorbit
