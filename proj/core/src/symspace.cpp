#include "pplab/symspace.hpp"

#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace pplab {

unsigned MultiIndex::degree() const
{
  return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

std::uint64_t binomial(unsigned n, unsigned k)
{
  if (k > n)
    return 0;
  // Row n of Pascal's triangle, truncated at column k.
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = std::min(i, k); j > 0; --j)
      row[j] += row[j - 1];
  return row[k];
}

namespace {

void enumerate(std::size_t var, unsigned remaining, std::vector<unsigned>& cur,
               std::vector<MultiIndex>& out)
{
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.push_back({cur});
    return;
  }
  for (unsigned p = remaining + 1; p-- > 0;) {
    cur[var] = p;
    enumerate(var + 1, remaining - p, cur, out);
  }
}

} // namespace

std::vector<MultiIndex> multi_indices_of_degree(std::size_t num_vars, unsigned degree)
{
  std::vector<MultiIndex> out;
  if (num_vars == 0) {
    if (degree == 0)
      out.push_back({});
    return out;
  }
  std::vector<unsigned> cur(num_vars, 0);
  enumerate(0, degree, cur, out);
  return out;
}

std::vector<MultiIndex> multi_indices_up_to(std::size_t num_vars, unsigned max_degree)
{
  std::vector<MultiIndex> out;
  for (const auto& m : multi_indices_of_degree(num_vars + 1, max_degree))
    out.push_back({std::vector<unsigned>(m.exponents.begin() + 1, m.exponents.end())});
  return out;
}

MonomialBasis::MonomialBasis(unsigned N, unsigned degree)
  : N_(N), degree_(degree), monomials_(multi_indices_of_degree(N + 1, degree))
{
  if (N < 1)
    throw std::invalid_argument("MonomialBasis: N must be at least 1");
  for (std::size_t i = 0; i < monomials_.size(); ++i)
    index_.emplace(monomials_[i].exponents, i);
}

std::size_t MonomialBasis::index_of(const MultiIndex& m) const
{
  auto it = index_.find(m.exponents);
  if (it == index_.end())
    throw std::out_of_range("MonomialBasis::index_of: monomial not in basis");
  return it->second;
}

const MonomialBasis& monomial_basis(unsigned N, unsigned n)
{
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<const MonomialBasis>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{N, n}];
  if (!slot)
    slot = std::make_unique<const MonomialBasis>(N, n);
  return *slot;
}

std::uint64_t dim_sym(unsigned N, unsigned n)
{
  if (N < 1)
    throw std::invalid_argument("dim_sym: N must be at least 1");
  std::uint64_t sum = 0;
  for (unsigned i = 0; i <= n; ++i)
    sum += binomial(i + N - 1, N - 1);
  const std::uint64_t closed = binomial(n + N, N);
  if (sum != closed)
    throw std::logic_error("dim_sym: partial-sum and closed binomial forms disagree");
  return closed;
}

PolyVector::PolyVector(const MonomialBasis& basis) : basis_(&basis), coeffs_(basis.size()) {}

PolyVector::PolyVector(const MonomialBasis& basis, std::vector<Rational> coeffs)
  : basis_(&basis), coeffs_(std::move(coeffs))
{
  if (coeffs_.size() != basis.size())
    throw std::invalid_argument("PolyVector: coefficient count does not match basis");
}

PolyVector PolyVector::monomial(const MonomialBasis& basis, const MultiIndex& m, const Rational& c)
{
  PolyVector f(basis);
  f.coeffs_[basis.index_of(m)] = c;
  return f;
}

bool PolyVector::is_zero() const
{
  for (const auto& c : coeffs_)
    if (!pplab::is_zero(c))
      return false;
  return true;
}

PolyVector operator+(const PolyVector& a, const PolyVector& b)
{
  if (a.basis_ != b.basis_)
    throw std::invalid_argument("PolyVector sum: different bases");
  PolyVector s(a);
  for (std::size_t i = 0; i < s.coeffs_.size(); ++i)
    s.coeffs_[i] += b.coeffs_[i];
  return s;
}

PolyVector operator*(const Rational& s, const PolyVector& f)
{
  PolyVector g(f);
  for (auto& c : g.coeffs_)
    c *= s;
  return g;
}

bool operator==(const PolyVector& a, const PolyVector& b)
{
  return a.basis_->N() == b.basis_->N() && a.basis_->degree() == b.basis_->degree() &&
         a.coeffs_ == b.coeffs_;
}

PolyVector partial_derivative(const PolyVector& f, std::size_t var)
{
  const MonomialBasis& src = f.basis();
  if (var >= src.num_vars())
    throw std::invalid_argument("partial_derivative: variable index out of range");
  if (src.degree() == 0) {
    if (!f.is_zero())
      throw std::invalid_argument("partial_derivative: nonzero constant has no degree -1 image");
    return f;
  }
  const MonomialBasis& dst = monomial_basis(src.N(), src.degree() - 1);
  PolyVector out(dst);
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (is_zero(f[i]))
      continue;
    MultiIndex m = src[i];
    const unsigned p = m.exponents[var];
    if (p == 0)
      continue;
    m.exponents[var] = p - 1;
    out[dst.index_of(m)] += f[i] * p;
  }
  return out;
}

RationalMatrix derivative_matrix(unsigned N, unsigned n, std::size_t var)
{
  if (n == 0)
    throw std::invalid_argument("derivative_matrix: degree must be at least 1");
  const MonomialBasis& src = monomial_basis(N, n);
  const MonomialBasis& dst = monomial_basis(N, n - 1);
  RationalMatrix d(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const PolyVector img = partial_derivative(PolyVector::monomial(src, src[j]), var);
    for (std::size_t i = 0; i < dst.size(); ++i)
      d(i, j) = img[i];
  }
  return d;
}

void require_theorem_range(unsigned N, unsigned n, unsigned k)
{
  if (N < 1)
    throw std::invalid_argument("N >= 1 violated (N = " + std::to_string(N) + ")");
  if (k < 1)
    throw std::invalid_argument("1 <= k violated (k = " + std::to_string(k) + ")");
  if (k >= n)
    throw std::invalid_argument("k < n violated (k = " + std::to_string(k) +
                                ", n = " + std::to_string(n) + ")");
}

Subspace m_power_subspace(unsigned N, unsigned n, unsigned k)
{
  require_theorem_range(N, n, k);
  const MonomialBasis& b = monomial_basis(N, n);
  std::vector<std::vector<Rational>> gens;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].exponents[0] < n - k) {
      std::vector<Rational> e(b.size());
      e[i] = 1;
      gens.push_back(std::move(e));
    }
  }
  return Subspace::span(b.size(), gens);
}

std::uint64_t dim_m_power(unsigned N, unsigned n, unsigned k)
{
  require_theorem_range(N, n, k);
  std::uint64_t sum = 0;
  for (unsigned i = k + 1; i <= n; ++i)
    sum += binomial(i + N - 1, N - 1);
  return sum;
}

bool lemma1_identity(unsigned N, unsigned n, unsigned k)
{
  require_theorem_range(N, n, k);
  const std::uint64_t target = binomial(k + N, N);

  // Partial binomial sums.
  std::uint64_t low_sum = 0;
  for (unsigned i = 0; i <= k; ++i)
    low_sum += binomial(i + N - 1, N - 1);
  const std::uint64_t all_sum = dim_sym(N, n);
  const std::uint64_t m_sum = dim_m_power(N, n, k);
  const bool by_sums = low_sum == target && all_sum - m_sum == target;

  // Closed binomials (hockey stick for the m-power part).
  const std::uint64_t m_closed = binomial(n + N, N) - binomial(k + N, N);
  const bool by_closed = binomial(n + N, N) - m_closed == target && m_closed == m_sum;

  // Explicit bases.
  const std::size_t all_count = monomial_basis(N, n).size();
  const std::size_t m_count = m_power_subspace(N, n, k).dim();
  const std::size_t jet_count = multi_indices_up_to(N, k).size();
  const bool by_count = all_count - m_count == target && jet_count == target &&
                        all_count == all_sum && m_count == m_sum;

  return by_sums && by_closed && by_count;
}

} // namespace pplab
