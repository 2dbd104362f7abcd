#pragma once

#include "ktorbit/killing_tensor.hpp"

namespace ktorbit::test {

inline KTParams euclid(Rational A, Rational B, Rational C, Rational alpha, Rational beta, Rational gamma) {
  return {Signature::Euclidean, A, B, C, alpha, beta, gamma};
}

inline KTParams mink(Rational A, Rational B, Rational C, Rational alpha, Rational beta, Rational gamma) {
  return {Signature::Minkowski, A, B, C, alpha, beta, gamma};
}

inline Point2<Rational> pt(Rational u, Rational v) { return {u, v}; }

// Parameter-space coordinates as degree-one polynomials.
inline Polynomial<6> param(std::size_t index) { return Polynomial<6>::variable(index); }

}  // namespace ktorbit::test
