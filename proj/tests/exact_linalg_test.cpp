#include <gtest/gtest.h>

#include <random>

#include "ktorbit/group_actions.hpp"
#include "ktorbit/rat_matrix.hpp"
#include "ktorbit/rational.hpp"
#include "ktorbit/testkit.hpp"
#include "test_support.hpp"

namespace ktorbit {
namespace {

using test::euclid;
using test::mink;

TEST(Rational, CanonicalForm) {
  const Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, 7).denominator(), 1);
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(-3, 2).to_string(), "-3/2");
  EXPECT_EQ(Rational(4).to_string(), "4");
}

TEST(Rational, ParsesFractionsAndDecimalsExactly) {
  EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("-6/8"), Rational(-3, 4));
  EXPECT_EQ(Rational::parse("0.25"), Rational(1, 4));
  EXPECT_EQ(Rational::parse("0.1"), Rational(1, 10));
  EXPECT_EQ(Rational::parse("-1.5e-3"), Rational(-3, 2000));
  EXPECT_EQ(Rational::parse("2E2"), Rational(200));
  EXPECT_EQ(Rational::parse("17"), Rational(17));
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.2.3", "--1", "1e"}) {
    EXPECT_THROW((void)Rational::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, FromDoubleIsExactBinaryValue) {
  EXPECT_EQ(Rational::from_double(0.5), Rational(1, 2));
  EXPECT_EQ(Rational::from_double(-3.0), Rational(-3));
  // 0.1 is not representable; the conversion keeps the binary value.
  EXPECT_NE(Rational::from_double(0.1), Rational(1, 10));
  EXPECT_EQ(Rational::from_double(0.1).to_double(), 0.1);
}

TEST(Rational, ArithmeticAndErrors) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
  EXPECT_EQ(Rational(5).pow(0), Rational(1));
  EXPECT_THROW((void)(Rational(1) / Rational(0)), std::domain_error);
  EXPECT_THROW((void)Rational(0).pow(-1), std::domain_error);
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
}

TEST(Rational, ExactSqrt) {
  EXPECT_EQ(exact_sqrt(Rational(9, 4)), Rational(3, 2));
  EXPECT_EQ(exact_sqrt(Rational(0)), Rational(0));
  EXPECT_FALSE(exact_sqrt(Rational(2)).has_value());
  EXPECT_FALSE(exact_sqrt(Rational(-4)).has_value());
}

TEST(RatDet, Identity) { EXPECT_EQ(rat_det(RatMatrix::identity(3)), Rational(1)); }

TEST(RatDet, NonSquareThrows) { EXPECT_THROW((void)rat_det(RatMatrix(2, 3)), DimensionError); }

TEST(RatDet, GeneratorMatrixExamples) {
  EXPECT_EQ(rat_det(generator_matrix(euclid(0, 0, 1, 0, 0, 1))), Rational(-8));
  EXPECT_EQ(rat_det(generator_matrix(mink(0, 1, 0, 0, 0, 1))), Rational(2));
  EXPECT_EQ(rat_det(generator_matrix(mink(0, 0, 1, 0, 0, 1))), Rational(-8));
}

TEST(RatDet, RationalEntries) {
  const RatMatrix m{{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 5)}};
  EXPECT_EQ(rat_det(m), Rational(1, 10) - Rational(1, 12));
}

TEST(RatRank, Examples) {
  EXPECT_EQ(rat_rank(RatMatrix(6, 6)), 0U);
  EXPECT_EQ(rat_rank(generator_matrix(euclid(0, 0, 0, 1, 0, 0))), 5U);
  EXPECT_EQ(rat_rank(RatMatrix::identity(4)), 4U);
}

RatMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  }
  return m;
}

TEST(RatRank, DuplicatedRowsMatchSubmatrix) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    RatMatrix m = random_int_matrix(rng, 6, 6, 3);
    for (std::size_t c = 0; c < 6; ++c) m(5, c) = m(1, c);
    const std::array<std::size_t, 5> rows{0, 1, 2, 3, 4};
    const std::array<std::size_t, 6> cols{0, 1, 2, 3, 4, 5};
    EXPECT_EQ(rat_rank(m), rank_oracle(m.select(rows, cols)));
  }
}

TEST(RatRank, AgreesWithMinorOracleOnRandomMatrices) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> pick_rank(0, 6);
  for (int trial = 0; trial < 500; ++trial) {
    RatMatrix m = random_int_matrix(rng, 6, 6, 3);
    // Force a spread of ranks by overwriting rows with combinations.
    const int deficient = pick_rank(rng);
    for (int r = 6 - deficient; r < 6 && r > 0; ++r) {
      for (std::size_t c = 0; c < 6; ++c) m(r, c) = m(0, c) * Rational(r) - m(r - 1, c);
    }
    ASSERT_EQ(rat_rank(m), rank_oracle(m)) << to_string(m);
  }
}

TEST(RatDet, BareissAgreesWithCofactorExpansion) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const RatMatrix m = random_int_matrix(rng, n, n, 4);
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) rows[r][c] = m(r, c) / Rational(static_cast<long>(r + 1));
    }
    RatMatrix scaled(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) scaled(r, c) = rows[r][c];
    }
    ASSERT_EQ(rat_det(scaled), cofactor_det(rows));
  }
}

TEST(RankOracle, Examples) {
  EXPECT_EQ(rank_oracle(generator_matrix(euclid(0, 0, 0, 1, 0, 0))), 5U);
  EXPECT_EQ(rank_oracle(RatMatrix(6, 6)), 0U);
  EXPECT_EQ(rank_oracle(generator_matrix(mink(0, 0, 0, 0, 0, 1))), 4U);
  EXPECT_EQ(rank_oracle(RatMatrix(2, 5)), 0U);
}

TEST(RankOracle, RejectsLargeMatrices) { EXPECT_THROW((void)rank_oracle(RatMatrix(7, 7)), OracleLimitError); }

TEST(SolveExact, ConsistentAndInconsistent) {
  const RatMatrix m{{1, 2}, {2, 4}};
  const std::vector<Rational> good{3, 6};
  const auto x = solve_exact(m, good);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0] + Rational(2) * (*x)[1], Rational(3));
  const std::vector<Rational> bad{3, 7};
  EXPECT_FALSE(solve_exact(m, bad).has_value());
  const std::vector<Rational> wrong_size{1};
  EXPECT_THROW((void)solve_exact(m, wrong_size), DimensionError);
}

// det M as a polynomial identity in the six parameters.
Polynomial<6> symbolic_det(Signature sig) {
  std::vector<std::vector<ParamPoly>> rows;
  for (GeneratorId id : kAllGenerators) {
    const VectorField6 f = generator_field(id, sig);
    rows.emplace_back(f.begin(), f.end());
  }
  return cofactor_det(rows);
}

TEST(DeterminantFormula, Euclidean) {
  using test::param;
  const auto A = param(kA), B = param(kB), C = param(kC);
  const auto a = param(kAlpha), b = param(kBeta), g = param(kGamma);
  const auto p = a * a - b * b - g * (A - B);
  const auto q = a * b + g * C;
  const auto delta = p * p + Polynomial<6>(4) * q * q;
  EXPECT_EQ(symbolic_det(Signature::Euclidean), Polynomial<6>(-2) * g * delta);
}

TEST(DeterminantFormula, Minkowski) {
  using test::param;
  const auto A = param(kA), B = param(kB), C = param(kC);
  const auto a = param(kAlpha), b = param(kBeta), g = param(kGamma);
  const auto zp = g * (A + B - Polynomial<6>(2) * C) - (a - b).pow(2);
  const auto zm = g * (A + B + Polynomial<6>(2) * C) - (a + b).pow(2);
  EXPECT_EQ(symbolic_det(Signature::Minkowski), Polynomial<6>(2) * g * zp * zm);
}

TEST(Polynomial, ArithmeticAndSubstitution) {
  const auto x = Polynomial<2>::variable(0);
  const auto y = Polynomial<2>::variable(1);
  const auto p = (x + y).pow(2) - x * x - y * y;
  EXPECT_EQ(p, Polynomial<2>(2) * x * y);
  EXPECT_EQ(p.total_degree(), 2);
  EXPECT_EQ(Polynomial<2>().total_degree(), -1);
  EXPECT_EQ(p.derivative(0), Polynomial<2>(2) * y);
  const std::array<Rational, 2> at{Rational(3), Rational(1, 2)};
  EXPECT_EQ(p.evaluate(std::span<const Rational, 2>(at)), Rational(3));
  const auto s = Polynomial<1>::variable(0);
  const auto line = p.substitute<1>({s, s + Polynomial<1>(1)});
  EXPECT_EQ(line, Polynomial<1>(2) * s * s + Polynomial<1>(2) * s);
  EXPECT_TRUE((x - x).is_zero());
}

}  // namespace
}  // namespace ktorbit
