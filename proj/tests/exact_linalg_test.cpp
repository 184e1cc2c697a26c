#include "pplab/laurent.hpp"
#include "pplab/linalg.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace pplab {
namespace {

using testing::naive_rref;
using testing::random_matrix;

TEST(Rref, ProportionalRowsHaveRankOne)
{
  const RrefResult r = rref({{1, 2}, {2, 4}});
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});
  EXPECT_EQ(r.matrix, (RationalMatrix{{1, 2}, {0, 0}}));
}

TEST(Rref, IdentityIsFixed)
{
  const RrefResult r = rref(RationalMatrix::identity(3));
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.matrix, RationalMatrix::identity(3));
}

TEST(Rref, ScalesPivotRows)
{
  const RrefResult r = rref({{2, 0, 0}, {0, 1, 0}});
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.matrix, (RationalMatrix{{1, 0, 0}, {0, 1, 0}}));
}

TEST(Rref, HandlesRationalEntriesAndSkippedColumns)
{
  const RationalMatrix m{{0, Rational(1, 2), 3, 1}, {0, 1, 6, Rational(-1, 3)}, {0, 0, 0, 5}};
  const RrefResult r = rref(m);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(r.matrix, naive_rref(m));
}

TEST(Rref, MatchesTextbookEliminationOnRandomMatrices)
{
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = static_cast<std::size_t>(testing::uniform(rng, 0, 7));
    const auto cols = static_cast<std::size_t>(testing::uniform(rng, 0, 7));
    const RationalMatrix m = random_matrix(rng, rows, cols, 0.4);
    std::size_t naive_rank = 0;
    const RationalMatrix expected = naive_rref(m, &naive_rank);
    const RrefResult r = rref(m);
    ASSERT_EQ(r.matrix, expected) << "trial " << trial;
    ASSERT_EQ(r.rank, naive_rank);
    ASSERT_EQ(rank(m), naive_rank);
  }
}

TEST(Rref, IsIdempotent)
{
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const RationalMatrix m = random_matrix(rng, 5, 6, 0.5);
    const RationalMatrix once = rref(m).matrix;
    EXPECT_EQ(rref(once).matrix, once);
  }
}

TEST(Kernel, SingleFreeColumn)
{
  const Subspace k = kernel_basis({{2, 0, 0}, {0, 1, 0}});
  EXPECT_EQ(k.ambient_dim(), 3u);
  EXPECT_TRUE(subspace_equal(k, Subspace::span(RationalMatrix{{0, 0, 1}})));
}

TEST(Kernel, IdentityAndZero)
{
  EXPECT_EQ(kernel_basis(RationalMatrix::identity(4)).dim(), 0u);
  EXPECT_TRUE(subspace_equal(kernel_basis(RationalMatrix::zero(2, 3)), Subspace::full(3)));
}

TEST(Kernel, RankNullityAndAnnihilation)
{
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
    const auto cols = static_cast<std::size_t>(testing::uniform(rng, 1, 7));
    const RationalMatrix m = random_matrix(rng, rows, cols, 0.5, 3);
    const Subspace k = kernel_basis(m);
    ASSERT_EQ(rank(m) + k.dim(), cols);
    // basis rows times M^T vanish
    ASSERT_TRUE((k.basis() * m.transpose()).is_zero());
  }
}

TEST(Subspace, EqualityIsSpanEquality)
{
  EXPECT_TRUE(subspace_equal(Subspace::span(RationalMatrix{{1, 0}}), Subspace::span(RationalMatrix{{2, 0}})));
  EXPECT_FALSE(subspace_equal(Subspace::span(RationalMatrix{{1, 0}}), Subspace::span(RationalMatrix{{0, 1}})));
  EXPECT_TRUE(subspace_equal(Subspace::span(RationalMatrix{{1, 1}, {1, -1}}), Subspace::full(2)));
}

TEST(Subspace, DimensionMismatchThrows)
{
  EXPECT_THROW(subspace_equal(Subspace::full(2), Subspace::full(3)), std::invalid_argument);
}

TEST(Subspace, InvariantUnderInvertibleRecombination)
{
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const RationalMatrix gens = random_matrix(rng, 3, 5, 0.3);
    RationalMatrix mix = random_matrix(rng, 3, 3, 0.2);
    if (is_zero(determinant(mix)))
      continue;
    const Subspace a = Subspace::span(gens);
    const Subspace b = Subspace::span(mix * gens);
    EXPECT_TRUE(subspace_equal(a, b));
    EXPECT_TRUE(a.contains(b) && b.contains(a));
  }
}

TEST(Subspace, ContainmentOfVectors)
{
  const Subspace s = Subspace::span(RationalMatrix{{1, 1, 0}, {0, 0, 1}});
  EXPECT_TRUE(s.contains(std::vector<Rational>{3, 3, Rational(-1, 2)}));
  EXPECT_FALSE(s.contains(std::vector<Rational>{1, 0, 0}));
}

TEST(Determinant, MatchesLeibnizExpansion)
{
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    const RationalMatrix m = random_matrix(rng, n, n, 0.3);
    const Rational expected =
      testing::leibniz_det<Rational>(n, [&](std::size_t i, std::size_t j) { return m(i, j); });
    ASSERT_EQ(determinant(m), expected);
  }
}

TEST(Inverse, RoundTripsAndRejectsSingular)
{
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const RationalMatrix m = random_matrix(rng, 4, 4, 0.2);
    if (is_zero(determinant(m))) {
      EXPECT_THROW(inverse(m), std::domain_error);
      continue;
    }
    EXPECT_EQ(m * inverse(m), RationalMatrix::identity(4));
  }
  EXPECT_THROW(inverse({{1, 2}, {2, 4}}), std::domain_error);
}

LaurentPoly t_pow(int e, const Rational& c = 1) { return LaurentPoly::monomial(c, e); }

TEST(DetLaurent, WorkedExamples)
{
  EXPECT_EQ(det_laurent(LaurentMatrix::diagonal({t_pow(1), t_pow(-1)})), LaurentPoly(1));
  EXPECT_EQ(det_laurent(LaurentMatrix::diagonal({t_pow(2), t_pow(2)})), t_pow(4));
  EXPECT_EQ(det_laurent(LaurentMatrix{{t_pow(1), 1}, {0, t_pow(1)}}), t_pow(2));
  EXPECT_THROW(det_laurent(LaurentMatrix(2, 3)), std::invalid_argument);
}

TEST(DetLaurent, MatchesLeibnizAndIsMultiplicative)
{
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
    const LaurentMatrix a = testing::random_laurent_matrix(rng, n);
    const LaurentMatrix b = testing::random_laurent_matrix(rng, n);
    const LaurentPoly expected =
      testing::leibniz_det<LaurentPoly>(n, [&](std::size_t i, std::size_t j) { return a(i, j); });
    ASSERT_EQ(det_laurent(a), expected);
    ASSERT_EQ(det_laurent(a * b), det_laurent(a) * det_laurent(b));
  }
}

TEST(InverseLaurent, InvertsUnimodularProducts)
{
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3;
    // Elementary operations with Laurent multipliers keep det a unit.
    LaurentMatrix m = LaurentMatrix::diagonal(
      {t_pow(static_cast<int>(testing::uniform(rng, -3, 3))), t_pow(1, 2), t_pow(-2, Rational(-1, 3))});
    for (int step = 0; step < 4; ++step) {
      LaurentMatrix e = LaurentMatrix::identity(n);
      const auto i = static_cast<std::size_t>(testing::uniform(rng, 0, 2));
      const auto j = (i + 1 + static_cast<std::size_t>(testing::uniform(rng, 0, 1))) % n;
      e(i, j) = testing::random_laurent(rng, -2, 2, 2);
      m = step % 2 ? e * m : m * e;
    }
    const LaurentMatrix inv = inverse_laurent(m);
    EXPECT_EQ(m * inv, LaurentMatrix::identity(n));
  }
  EXPECT_THROW(inverse_laurent(LaurentMatrix::diagonal({t_pow(1) + 1, 1})), std::domain_error);
}

TEST(Laurent, ExactDivision)
{
  const LaurentPoly a = (t_pow(1) + 1) * (t_pow(-2) - t_pow(3, 2));
  EXPECT_EQ(exact_divide(a, t_pow(1) + 1), t_pow(-2) - t_pow(3, 2));
  EXPECT_THROW(exact_divide(t_pow(2) + 1, t_pow(1) + 1), std::domain_error);
}

} // namespace
} // namespace pplab
