#include "pplab/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace pplab {

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Scales every row by the lcm of its denominators. Returns the product of
// the scale factors so callers can undo it for determinants.
IntRows integer_rows(const RationalMatrix& m, Integer* scale = nullptr)
{
  IntRows out(m.rows(), std::vector<Integer>(m.cols()));
  if (scale)
    *scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (const auto& q : m.row(i))
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      out[i][j] = q.get_num() * (l / q.get_den());
    }
    if (scale)
      *scale *= l;
  }
  return out;
}

struct Echelon {
  IntRows rows;
  std::vector<std::size_t> pivots;
  bool odd_swaps = false;
  Integer last_pivot = 1;
};

// Fraction-free forward elimination. Entry (i, j) below the current pivot
// row is always a minor of the input, so the division by the previous
// pivot is exact.
Echelon bareiss_echelon(IntRows a, std::size_t cols)
{
  Echelon e;
  const std::size_t nrows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  Integer t;
  for (std::size_t c = 0; c < cols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && sgn(a[p][c]) == 0)
      ++p;
    if (p == nrows)
      continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      e.odd_swaps = !e.odd_swaps;
    }
    const Integer& piv = a[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const Integer lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = piv * a[i][j];
        if (sgn(lead) != 0)
          t -= lead * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    e.pivots.push_back(c);
    ++r;
  }
  e.last_pivot = prev;
  e.rows = std::move(a);
  return e;
}

} // namespace

RrefResult rref(const RationalMatrix& m)
{
  Echelon e = bareiss_echelon(integer_rows(m), m.cols());
  const std::size_t rk = e.pivots.size();

  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < rk; ++i) {
    const Integer& piv = e.rows[i][e.pivots[i]];
    for (std::size_t j = e.pivots[i]; j < m.cols(); ++j)
      if (sgn(e.rows[i][j]) != 0)
        out(i, j) = make_rational(e.rows[i][j], piv);
    out(i, e.pivots[i]) = 1;
  }
  // Back substitution: clear above each pivot, bottom-up.
  Rational t;
  for (std::size_t i = rk; i-- > 0;) {
    const std::size_t pc = e.pivots[i];
    for (std::size_t h = 0; h < i; ++h) {
      const Rational f = out(h, pc);
      if (is_zero(f))
        continue;
      for (std::size_t j = pc; j < m.cols(); ++j) {
        if (is_zero(out(i, j)))
          continue;
        t = f * out(i, j);
        out(h, j) -= t;
      }
    }
  }
  return {std::move(out), std::move(e.pivots), rk};
}

std::size_t rank(const RationalMatrix& m)
{
  return bareiss_echelon(integer_rows(m), m.cols()).pivots.size();
}

Rational determinant(const RationalMatrix& m)
{
  if (!m.is_square())
    throw std::invalid_argument("determinant: matrix is not square");
  if (m.rows() == 0)
    return 1;
  Integer scale;
  Echelon e = bareiss_echelon(integer_rows(m, &scale), m.cols());
  if (e.pivots.size() < m.rows())
    return 0;
  const Rational d = make_rational(e.last_pivot, scale);
  return e.odd_swaps ? Rational(-d) : d;
}

RationalMatrix inverse(const RationalMatrix& m)
{
  if (!m.is_square())
    throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1))
    throw std::domain_error("inverse: matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = r.matrix(i, n + j);
  return inv;
}

Subspace Subspace::span(const RationalMatrix& generators)
{
  RrefResult r = rref(generators);
  return {generators.cols(), r.matrix.row_block(0, r.rank), std::move(r.pivots)};
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<std::vector<Rational>>& generators)
{
  RationalMatrix g(generators.size(), ambient_dim);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != ambient_dim)
      throw std::invalid_argument("Subspace::span: generator has wrong length");
    for (std::size_t j = 0; j < ambient_dim; ++j)
      g(i, j) = generators[i][j];
  }
  return span(g);
}

Subspace Subspace::zero(std::size_t ambient_dim)
{
  return {ambient_dim, RationalMatrix(0, ambient_dim), {}};
}

Subspace Subspace::full(std::size_t ambient_dim)
{
  std::vector<std::size_t> piv(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i)
    piv[i] = i;
  return {ambient_dim, RationalMatrix::identity(ambient_dim), std::move(piv)};
}

bool Subspace::contains(std::span<const Rational> v) const
{
  if (v.size() != ambient_dim_)
    throw std::invalid_argument("Subspace::contains: vector has wrong length");
  // Reduce v against the RREF basis; v is inside iff the remainder is zero.
  std::vector<Rational> rem(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational f = rem[pivots_[i]];
    if (is_zero(f))
      continue;
    for (std::size_t j = 0; j < ambient_dim_; ++j)
      if (!is_zero(basis_(i, j)))
        rem[j] -= f * basis_(i, j);
  }
  for (const auto& x : rem)
    if (!is_zero(x))
      return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const
{
  if (other.ambient_dim_ != ambient_dim_)
    throw std::invalid_argument("Subspace::contains: ambient dimensions differ");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i)))
      return false;
  return true;
}

Subspace kernel_basis(const RationalMatrix& m)
{
  RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots)
    is_pivot[p] = true;

  RationalMatrix gens(n - r.rank, n);
  std::size_t g = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f])
      continue;
    gens(g, f) = 1;
    for (std::size_t i = 0; i < r.rank; ++i)
      if (!is_zero(r.matrix(i, f)))
        gens(g, r.pivots[i]) = -r.matrix(i, f);
    ++g;
  }
  return Subspace::span(gens);
}

Subspace image(const RationalMatrix& m)
{
  return Subspace::span(m.transpose());
}

bool subspace_equal(const Subspace& a, const Subspace& b)
{
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace_equal: ambient dimensions differ");
  return a.basis() == b.basis();
}

} // namespace pplab
