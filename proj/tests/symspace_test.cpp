#include "pplab/symspace.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace pplab {
namespace {

// Every exponent vector in [0, n]^(N+1) with coordinate sum n.
std::vector<std::vector<unsigned>> brute_force_monomials(unsigned N, unsigned n)
{
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(N + 1, 0);
  while (true) {
    unsigned s = 0;
    for (auto x : e)
      s += x;
    if (s == n)
      out.push_back(e);
    std::size_t i = 0;
    while (i <= N && e[i] == n)
      e[i++] = 0;
    if (i > N)
      break;
    ++e[i];
  }
  return out;
}

MultiIndex mi(std::vector<unsigned> e) { return {std::move(e)}; }

TEST(MonomialBasis, SmallExamplesInOrder)
{
  const MonomialBasis& b12 = monomial_basis(1, 2);
  ASSERT_EQ(b12.size(), 3u);
  EXPECT_EQ(b12[0], mi({2, 0}));
  EXPECT_EQ(b12[1], mi({1, 1}));
  EXPECT_EQ(b12[2], mi({0, 2}));

  const MonomialBasis& b21 = monomial_basis(2, 1);
  ASSERT_EQ(b21.size(), 3u);
  EXPECT_EQ(b21[0], mi({1, 0, 0}));
  EXPECT_EQ(b21[1], mi({0, 1, 0}));
  EXPECT_EQ(b21[2], mi({0, 0, 1}));

  EXPECT_EQ(monomial_basis(2, 2).size(), brute_force_monomials(2, 2).size());
  EXPECT_EQ(monomial_basis(2, 2).size(), 6u);
}

TEST(MonomialBasis, StrictlyDescendingLexAndComplete)
{
  for (unsigned N = 1; N <= 4; ++N)
    for (unsigned n = 0; n <= 8; ++n) {
      const MonomialBasis& b = monomial_basis(N, n);
      ASSERT_EQ(b.size(), dim_sym(N, n)) << N << " " << n;
      for (std::size_t i = 1; i < b.size(); ++i)
        ASSERT_GT(b[i - 1], b[i]);
      if (N <= 3 && n <= 5) {
        std::set<std::vector<unsigned>> want;
        for (auto& e : brute_force_monomials(N, n))
          want.insert(e);
        std::set<std::vector<unsigned>> got;
        for (const auto& m : b.monomials())
          got.insert(m.exponents);
        ASSERT_EQ(got, want);
      }
    }
}

TEST(DimSym, Examples)
{
  EXPECT_EQ(dim_sym(2, 2), 6u);  // 1 + 2 + 3
  EXPECT_EQ(dim_sym(1, 3), 4u);
  EXPECT_EQ(dim_sym(3, 4), brute_force_monomials(3, 4).size());
  EXPECT_EQ(dim_sym(3, 4), 35u);
}

TEST(Binomial, PascalValues)
{
  EXPECT_EQ(binomial(0, 0), 1u);
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(8, 3), 56u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(60, 30), 118264581564861424ULL);
}

Subspace unit_span(std::size_t ambient, const std::vector<std::size_t>& idx)
{
  std::vector<std::vector<Rational>> g;
  for (auto i : idx) {
    std::vector<Rational> e(ambient);
    e[i] = 1;
    g.push_back(e);
  }
  return Subspace::span(ambient, g);
}

TEST(MPowerSubspace, Examples)
{
  const MonomialBasis& b12 = monomial_basis(1, 2);
  const Subspace s121 = m_power_subspace(1, 2, 1);
  EXPECT_EQ(s121.dim(), 1u);
  EXPECT_TRUE(subspace_equal(s121, unit_span(3, {b12.index_of(mi({0, 2}))})));

  const MonomialBasis& b13 = monomial_basis(1, 3);
  const Subspace s131 = m_power_subspace(1, 3, 1);
  EXPECT_TRUE(subspace_equal(s131, unit_span(4, {b13.index_of(mi({1, 2})), b13.index_of(mi({0, 3}))})));

  const MonomialBasis& b22 = monomial_basis(2, 2);
  const Subspace s221 = m_power_subspace(2, 2, 1);
  EXPECT_EQ(s221.dim(), 3u);
  EXPECT_EQ(dim_m_power(2, 2, 1), 3u);
  EXPECT_TRUE(subspace_equal(
    s221, unit_span(6, {b22.index_of(mi({0, 2, 0})), b22.index_of(mi({0, 1, 1})),
                        b22.index_of(mi({0, 0, 2}))})));
}

TEST(MPowerSubspace, RangeViolationsThrow)
{
  EXPECT_THROW(m_power_subspace(1, 2, 0), std::invalid_argument);
  EXPECT_THROW(m_power_subspace(1, 2, 2), std::invalid_argument);
  EXPECT_THROW(lemma1_identity(2, 3, 3), std::invalid_argument);
}

TEST(MPowerSubspace, IsSuffixOfBasis)
{
  for (unsigned N = 1; N <= 3; ++N)
    for (unsigned n = 2; n <= 6; ++n)
      for (unsigned k = 1; k < n; ++k) {
        const Subspace s = m_power_subspace(N, n, k);
        const std::size_t total = dim_sym(N, n);
        for (std::size_t i = 0; i < s.dim(); ++i)
          ASSERT_EQ(s.pivots()[i], total - s.dim() + i);
      }
}

// m^{k+1} S^{n-k-1}(V*) as the image of S^{k+1}(m) (x) S^{n-k-1}(V*): span
// of all products of a degree-(k+1) monomial in x_1..x_N with any degree
// n-k-1 monomial.
TEST(MPowerSubspace, EqualsImageOfMultiplicationMap)
{
  for (unsigned N = 1; N <= 3; ++N)
    for (unsigned n = 2; n <= 5; ++n)
      for (unsigned k = 1; k < n; ++k) {
        const MonomialBasis& b = monomial_basis(N, n);
        std::vector<std::vector<Rational>> gens;
        for (const auto& left : brute_force_monomials(N, k + 1)) {
          if (left[0] != 0)
            continue;
          for (const auto& right : brute_force_monomials(N, n - k - 1)) {
            testing::SparsePoly a{{left, 1}}, c{{right, 1}};
            const auto prod = testing::sparse_mul(a, c);
            std::vector<Rational> v(b.size());
            for (const auto& [e, coef] : prod)
              v[b.index_of(MultiIndex{e})] = coef;
            gens.push_back(v);
          }
        }
        ASSERT_TRUE(subspace_equal(Subspace::span(b.size(), gens), m_power_subspace(N, n, k)))
          << N << " " << n << " " << k;
      }
}

TEST(Lemma1, Examples)
{
  EXPECT_TRUE(lemma1_identity(1, 3, 1));
  EXPECT_TRUE(lemma1_identity(2, 2, 1));
  EXPECT_TRUE(lemma1_identity(3, 5, 2));
  // 56 - 46 = 10 by explicit enumeration
  std::size_t m_count = 0;
  for (const auto& e : brute_force_monomials(3, 5))
    if (e[0] < 5 - 2)
      ++m_count;
  EXPECT_EQ(brute_force_monomials(3, 5).size(), 56u);
  EXPECT_EQ(m_count, 46u);
  EXPECT_EQ(dim_m_power(3, 5, 2), 46u);
}

TEST(Lemma1, DimensionCountOnGrid)
{
  for (unsigned N = 1; N <= 4; ++N)
    for (unsigned n = 2; n <= 8; ++n)
      for (unsigned k = 1; k < n; ++k) {
        ASSERT_TRUE(lemma1_identity(N, n, k));
        ASSERT_EQ(m_power_subspace(N, n, k).dim() + binomial(k + N, N), dim_sym(N, n));
      }
}

TEST(PartialDerivative, PowerRule)
{
  const MonomialBasis& b2 = monomial_basis(1, 2);
  const MonomialBasis& b1 = monomial_basis(1, 1);
  EXPECT_EQ(partial_derivative(PolyVector::monomial(b2, mi({2, 0})), 0),
            PolyVector::monomial(b1, mi({1, 0}), 2));
  EXPECT_TRUE(partial_derivative(PolyVector::monomial(b2, mi({0, 2})), 0).is_zero());
  EXPECT_EQ(partial_derivative(PolyVector::monomial(b2, mi({1, 1})), 0),
            PolyVector::monomial(b1, mi({0, 1})));
}

TEST(PartialDerivative, DegreeZeroAndBadVariable)
{
  const MonomialBasis& b0 = monomial_basis(2, 0);
  EXPECT_TRUE(partial_derivative(PolyVector(b0), 1).is_zero());
  EXPECT_THROW(partial_derivative(PolyVector::monomial(b0, mi({0, 0, 0})), 0), std::invalid_argument);
  EXPECT_THROW(partial_derivative(PolyVector(monomial_basis(2, 2)), 3), std::invalid_argument);
}

PolyVector random_form(std::mt19937_64& rng, unsigned N, unsigned n)
{
  const MonomialBasis& b = monomial_basis(N, n);
  std::vector<Rational> c(b.size());
  for (auto& x : c)
    x = testing::small_rational(rng);
  return {b, c};
}

TEST(PartialDerivative, DerivativesCommute)
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto N = static_cast<unsigned>(testing::uniform(rng, 1, 3));
    const auto n = static_cast<unsigned>(testing::uniform(rng, 2, 6));
    const PolyVector f = random_form(rng, N, n);
    const auto i = static_cast<std::size_t>(testing::uniform(rng, 0, N));
    const auto j = static_cast<std::size_t>(testing::uniform(rng, 0, N));
    ASSERT_EQ(partial_derivative(partial_derivative(f, i), j),
              partial_derivative(partial_derivative(f, j), i));
  }
}

TEST(PartialDerivative, EulerIdentity)
{
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const auto N = static_cast<unsigned>(testing::uniform(rng, 1, 3));
    const auto n = static_cast<unsigned>(testing::uniform(rng, 1, 6));
    const PolyVector f = random_form(rng, N, n);
    const MonomialBasis& b = f.basis();

    testing::SparsePoly euler;
    for (std::size_t i = 0; i <= N; ++i) {
      const PolyVector d = partial_derivative(f, i);
      testing::SparsePoly dp;
      for (std::size_t j = 0; j < d.basis().size(); ++j)
        if (sgn(d[j]) != 0)
          dp[d.basis()[j].exponents] = d[j];
      std::vector<unsigned> xi(N + 1, 0);
      xi[i] = 1;
      for (const auto& [e, c] : testing::sparse_mul({{xi, 1}}, dp))
        euler[e] += c;
    }
    PolyVector lhs(b);
    for (const auto& [e, c] : euler)
      lhs[b.index_of(MultiIndex{e})] = c;
    ASSERT_EQ(lhs, Rational(n) * f);
  }
}

TEST(DerivativeMatrix, AgreesWithPartialDerivative)
{
  const RationalMatrix d = derivative_matrix(2, 3, 1);
  const MonomialBasis& b = monomial_basis(2, 3);
  for (std::size_t j = 0; j < b.size(); ++j) {
    const PolyVector img = partial_derivative(PolyVector::monomial(b, b[j]), 1);
    for (std::size_t i = 0; i < d.rows(); ++i)
      ASSERT_EQ(d(i, j), img[i]);
  }
}

} // namespace
} // namespace pplab
