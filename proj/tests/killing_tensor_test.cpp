#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ktorbit/killing_tensor.hpp"
#include "ktorbit/testkit.hpp"
#include "test_support.hpp"

namespace ktorbit {
namespace {

using test::euclid;
using test::mink;
using test::pt;

TEST(Signature, Parsing) {
  EXPECT_EQ(parse_signature("Euclidean"), Signature::Euclidean);
  EXPECT_EQ(parse_signature("M"), Signature::Minkowski);
  EXPECT_EQ(parse_signature("minkowski"), Signature::Minkowski);
  EXPECT_FALSE(parse_signature("riemann").has_value());
  EXPECT_EQ(to_string(Signature::Minkowski), "minkowski");
}

TEST(ComponentsAt, Examples) {
  EXPECT_EQ(components_at(euclid(0, 0, 1, 0, 0, 1), pt(0, 0)), (SymMatrix2<Rational>{0, 1, 0}));
  EXPECT_EQ(components_at(mink(0, 1, 0, 0, 0, 1), pt(0, 0)), (SymMatrix2<Rational>{0, 0, 1}));
  EXPECT_EQ(components_at(euclid(0, 0, 0, 0, 0, 0), pt(5, -2)), (SymMatrix2<Rational>{}));
}

TEST(ComponentsAt, RepresentativeMatricesAwayFromOrigin) {
  // E1: (y^2, 1 - xy; x^2), M1: (x^2, xt; t^2 + 1) with (u, v) = (t, x).
  EXPECT_EQ(components_at(euclid(0, 0, 1, 0, 0, 1), pt(2, 3)), (SymMatrix2<Rational>{9, -5, 4}));
  EXPECT_EQ(components_at(mink(0, 1, 0, 0, 0, 1), pt(2, 3)), (SymMatrix2<Rational>{9, 6, 5}));
}

TEST(ComponentsAt, DoubleOverloadMatchesExact) {
  const KTParams k = euclid(Rational(1, 2), -2, 3, Rational(-1, 4), 1, 2);
  const auto exact = components_at(k, pt(Rational(3, 2), -1));
  const auto approx = components_at(k.signature, k.to_doubles(), {1.5, -1.0});
  EXPECT_DOUBLE_EQ(approx.k11, exact.k11.to_double());
  EXPECT_DOUBLE_EQ(approx.k12, exact.k12.to_double());
  EXPECT_DOUBLE_EQ(approx.k22, exact.k22.to_double());
}

TEST(MetricTensor, Components) {
  EXPECT_EQ(metric_tensor(Signature::Euclidean), euclid(1, 1, 0, 0, 0, 0));
  EXPECT_EQ(metric_tensor(Signature::Minkowski), mink(1, -1, 0, 0, 0, 0));
  EXPECT_EQ(components_at(metric_tensor(Signature::Euclidean), pt(7, 1)), (SymMatrix2<Rational>{1, 0, 1}));
  EXPECT_EQ(components_at(metric_tensor(Signature::Minkowski), pt(-2, 4)), (SymMatrix2<Rational>{1, 0, -1}));
}

TEST(ParamsFromField, RoundTripAndRejection) {
  Rng rng(3);
  for (Signature sig : {Signature::Euclidean, Signature::Minkowski}) {
    for (int i = 0; i < 50; ++i) {
      const KTParams k = random_tensor(rng, sig);
      EXPECT_EQ(params_from_field(component_field(k), sig), k);
    }
  }
  TensorField bad = component_field(euclid(1, 0, 0, 0, 0, 0));
  bad.k11 += BivariatePoly::variable(0);
  EXPECT_FALSE(params_from_field(bad, Signature::Euclidean).has_value());
}

TEST(PoissonBracket, VanishesOnFamilyAndMetric) {
  Rng rng(8);
  for (Signature sig : {Signature::Euclidean, Signature::Minkowski}) {
    for (int i = 0; i < 100; ++i) {
      const KTParams k = random_tensor(rng, sig);
      EXPECT_TRUE(poisson_bracket_with_H(component_field(k), sig).is_zero()) << k.to_string();
    }
    EXPECT_TRUE(poisson_bracket_with_H(component_field(metric_tensor(sig)), sig).is_zero());
  }
}

TEST(PoissonBracket, NonzeroWhenKillingEquationFails) {
  TensorField f = component_field(euclid(1, 2, 0, 1, 0, 1));
  const auto x = BivariatePoly::variable(0);
  f.k11 += x * x;
  const PhaseSpacePoly bracket = poisson_bracket_with_H(f, Signature::Euclidean);
  EXPECT_FALSE(bracket.is_zero());
  // d/dx (x^2 p1^2) * dH/dp1 = 2x p1^3 is the only surviving term.
  EXPECT_EQ(bracket, PhaseSpacePoly(2) * PhaseSpacePoly::variable(0) * PhaseSpacePoly::variable(2).pow(3));
}

TEST(FirstIntegral, Examples) {
  const UnivariatePoly along = first_integral_along_geodesic(euclid(0, 0, 1, 0, 0, 1), pt(0, 0), pt(1, 1));
  EXPECT_EQ(along, UnivariatePoly(2));

  const KTParams k = euclid(Rational(5, 3), 2, -1, 4, 1, -2);
  EXPECT_EQ(first_integral_along_geodesic(k, pt(0, 0), pt(1, 0)), UnivariatePoly(k.A));

  EXPECT_TRUE(first_integral_along_geodesic(euclid(0, 0, 0, 0, 0, 0), pt(3, 1), pt(2, 7)).is_zero());
  EXPECT_THROW((void)first_integral_along_geodesic(k, pt(0, 0), pt(0, 0)), std::invalid_argument);
}

TEST(FirstIntegral, ConstantAlongRandomGeodesics) {
  Rng rng(21);
  for (Signature sig : {Signature::Euclidean, Signature::Minkowski}) {
    for (int i = 0; i < 100; ++i) {
      const KTParams k = random_tensor(rng, sig);
      Point2<Rational> v{random_rational(rng), random_rational(rng)};
      if (v.u.is_zero() && v.v.is_zero()) v.u = 1;
      const auto poly = first_integral_along_geodesic(k, {random_rational(rng), random_rational(rng)}, v);
      EXPECT_LE(poly.total_degree(), 0) << k.to_string();
    }
  }
}

TEST(Eigenstructure, Examples) {
  const EigenReport e3 = eigenstructure_at(euclid(0, 0, 0, 0, 0, 1), {1.0, 0.0});
  EXPECT_EQ(e3.kind, EigenKind::RealSimple);
  EXPECT_DOUBLE_EQ(e3.lambda_plus.real(), 1.0);
  EXPECT_DOUBLE_EQ(e3.lambda_minus.real(), 0.0);

  for (const Point2<double>& p : {Point2<double>{0, 0}, Point2<double>{1.5, -2}, Point2<double>{-3, 3}}) {
    EXPECT_EQ(eigenstructure_at(mink(0, 0, 1, 0, 0, 0), p).kind, EigenKind::ComplexPair);
    EXPECT_EQ(eigenstructure_at(metric_tensor(Signature::Euclidean), p).kind, EigenKind::RealDouble);
    EXPECT_EQ(eigenstructure_at(metric_tensor(Signature::Minkowski), p).kind, EigenKind::RealDouble);
  }
}

TEST(Eigenstructure, KindFollowsDiscriminantAndVectorsAreOrthogonal) {
  Rng rng(99);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (Signature sig : {Signature::Euclidean, Signature::Minkowski}) {
    for (int i = 0; i < 200; ++i) {
      const KTParams k = random_tensor(rng, sig);
      const Point2<double> p{coord(rng), coord(rng)};
      const EigenReport r = eigenstructure_at(k, p);
      const double disc = discriminant_poly(k).evaluate(std::span<const double, 2>(std::array{p.u, p.v}));
      EXPECT_NEAR(r.discriminant, disc, 1e-9 * (1.0 + std::abs(disc)));
      if (r.kind == EigenKind::RealSimple) {
        EXPECT_GT(disc, 0.0);
        ASSERT_TRUE(r.vector_plus && r.vector_minus);
        const double g = metric_product(sig, *r.vector_plus, *r.vector_minus);
        EXPECT_LT(std::abs(g), 1e-9) << k.to_string();
      } else if (r.kind == EigenKind::ComplexPair) {
        EXPECT_LT(disc, 0.0);
        EXPECT_FALSE(r.vector_plus.has_value());
      }
    }
  }
}

TEST(Eigenstructure, EigenvectorsSatisfyEigenEquation) {
  const KTParams k = mink(0, 1, 0, 0, 0, 1);
  const Point2<double> p{0.7, -0.4};
  const EigenReport r = eigenstructure_at(k, p);
  ASSERT_EQ(r.kind, EigenKind::RealSimple);
  const auto K = components_at(k.signature, k.to_doubles(), p);
  // K^i_j = K^im g_mj with g = diag(1, -1).
  const double a = K.k11, b = -K.k12, c = K.k12, d = -K.k22;
  for (const auto& [lambda, vec] : {std::pair{r.lambda_plus.real(), *r.vector_plus},
                                    std::pair{r.lambda_minus.real(), *r.vector_minus}}) {
    EXPECT_NEAR(a * vec[0] + b * vec[1], lambda * vec[0], 1e-12);
    EXPECT_NEAR(c * vec[0] + d * vec[1], lambda * vec[1], 1e-12);
  }
}

TEST(Discriminant, Examples) {
  const auto t = BivariatePoly::variable(0);
  const auto x = BivariatePoly::variable(1);
  const auto plus = (x + t).pow(2) + BivariatePoly(2);
  const auto minus = (x - t).pow(2) - BivariatePoly(2);
  EXPECT_EQ(discriminant_poly(mink(0, 0, 1, 0, 0, 1)), plus * minus);
  EXPECT_TRUE(discriminant_poly(metric_tensor(Signature::Euclidean)).is_zero());
  EXPECT_EQ(discriminant_poly(mink(1, 0, 0, 0, 0, 0)), BivariatePoly(1));
}

TEST(Discriminant, MatchesDirectCharacteristicPolynomial) {
  // Independent expansion: Euclidean (K11 - K22)^2 + 4 K12^2,
  // Minkowski (K11 + K22)^2 - 4 K12^2.
  Rng rng(17);
  for (Signature sig : {Signature::Euclidean, Signature::Minkowski}) {
    for (int i = 0; i < 50; ++i) {
      const KTParams k = random_tensor(rng, sig);
      const TensorField f = component_field(k);
      const BivariatePoly expected = sig == Signature::Euclidean
                                         ? (f.k11 - f.k22).pow(2) + BivariatePoly(4) * f.k12.pow(2)
                                         : (f.k11 + f.k22).pow(2) - BivariatePoly(4) * f.k12.pow(2);
      EXPECT_EQ(discriminant_poly(k), expected);
    }
  }
}

TEST(Discriminant, MinkowskiFactorisesIntoNullFactors) {
  Rng rng(4);
  const auto t = BivariatePoly::variable(0);
  const auto x = BivariatePoly::variable(1);
  for (int i = 0; i < 50; ++i) {
    const KTParams k = random_tensor(rng, Signature::Minkowski);
    const auto s = x + t;
    const auto w = x - t;
    const auto P = BivariatePoly(k.gamma) * s * s + BivariatePoly(Rational(2) * (k.alpha + k.beta)) * s +
                   BivariatePoly(k.A + k.B + Rational(2) * k.C);
    const auto Q = BivariatePoly(k.gamma) * w * w + BivariatePoly(Rational(2) * (k.alpha - k.beta)) * w +
                   BivariatePoly(k.A + k.B - Rational(2) * k.C);
    EXPECT_EQ(discriminant_poly(k), P * Q) << k.to_string();
  }
}

}  // namespace
}  // namespace ktorbit
