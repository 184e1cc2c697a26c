#include "pplab/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace pplab {

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent)
{
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const Terms& terms)
{
  LaurentPoly p;
  for (const auto& [e, c] : terms)
    p.add_term(e, c);
  return p;
}

int LaurentPoly::min_exponent() const
{
  if (terms_.empty())
    throw std::domain_error("min_exponent of the zero Laurent polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const
{
  if (terms_.empty())
    throw std::domain_error("max_exponent of the zero Laurent polynomial");
  return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(int e) const
{
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const Rational& c)
{
  if (pplab::is_zero(c))
    return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (pplab::is_zero(it->second))
      terms_.erase(it);
  }
}

Rational LaurentPoly::evaluate(const Rational& t) const
{
  Rational s = 0;
  for (const auto& [e, c] : terms_)
    s += c * pow(t, e);
  return s;
}

LaurentPoly LaurentPoly::shifted(int by) const
{
  LaurentPoly p;
  for (const auto& [e, c] : terms_)
    p.terms_.emplace_hint(p.terms_.end(), e + by, c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
  for (const auto& [e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
  for (const auto& [e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
  LaurentPoly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      p.add_term(ea + eb, ca * cb);
  return p;
}

LaurentPoly operator-(const LaurentPoly& a)
{
  LaurentPoly p;
  for (const auto& [e, c] : a.terms_)
    p.terms_.emplace_hint(p.terms_.end(), e, -c);
  return p;
}

std::string LaurentPoly::to_string() const
{
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first)
      os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0)
      os << "-";
    first = false;
    const Rational mag = abs(c);
    if (e == 0 || mag != 1)
      os << mag.get_str();
    if (e != 0) {
      if (e == 0 || mag != 1)
        os << "*";
      os << "t";
      if (e != 1)
        os << "^" << e;
    }
  }
  return os.str();
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b)
{
  if (b.is_zero())
    throw std::domain_error("exact_divide: division by zero");
  if (a.is_zero())
    return {};
  if (b.is_monomial()) {
    const auto& [eb, cb] = *b.terms().begin();
    LaurentPoly q;
    for (const auto& [e, c] : a.terms())
      q.add_term(e - eb, c / cb);
    return q;
  }
  // Shift both to ordinary polynomials with nonzero constant term; b is then
  // prime to t, so divisibility in the Laurent ring is polynomial divisibility.
  const int amin = a.min_exponent();
  const int bmin = b.min_exponent();
  LaurentPoly rem = a.shifted(-amin);
  const LaurentPoly den = b.shifted(-bmin);
  const int dtop = den.max_exponent();
  const Rational lead = den.coeff(dtop);
  LaurentPoly quot;
  while (!rem.is_zero() && rem.max_exponent() >= dtop) {
    const int shift = rem.max_exponent() - dtop;
    const Rational f = rem.coeff(rem.max_exponent()) / lead;
    quot.add_term(shift, f);
    rem -= LaurentPoly::monomial(f, shift) * den;
  }
  if (!rem.is_zero())
    throw std::domain_error("exact_divide: divisor does not divide dividend");
  return quot.shifted(amin - bmin);
}

LaurentMatrix::LaurentMatrix(std::initializer_list<std::initializer_list<LaurentPoly>> rows)
  : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw std::invalid_argument("LaurentMatrix: ragged initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

LaurentMatrix LaurentMatrix::identity(std::size_t n)
{
  LaurentMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

LaurentMatrix LaurentMatrix::diagonal(const std::vector<LaurentPoly>& d)
{
  LaurentMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    m(i, i) = d[i];
  return m;
}

std::optional<int> LaurentMatrix::min_exponent() const
{
  std::optional<int> lo;
  for (const auto& p : entries_)
    if (!p.is_zero() && (!lo || p.min_exponent() < *lo))
      lo = p.min_exponent();
  return lo;
}

std::optional<int> LaurentMatrix::max_exponent() const
{
  std::optional<int> hi;
  for (const auto& p : entries_)
    if (!p.is_zero() && (!hi || p.max_exponent() > *hi))
      hi = p.max_exponent();
  return hi;
}

RationalMatrix LaurentMatrix::evaluate(const Rational& t) const
{
  RationalMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m(i, j) = (*this)(i, j).evaluate(t);
  return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b)
{
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("Laurent matrix product: inner dimensions differ");
  LaurentMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      if (a(i, l).is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(l, j).is_zero())
          c(i, j) += a(i, l) * b(l, j);
    }
  return c;
}

namespace {

// Fraction-free (Bareiss) elimination on the rows of `a` (width `cols`),
// pivoting on the first `pivot_cols` columns. With `jordan` the rows above
// the pivot are eliminated too, and every diagonal entry ends up equal to
// the final pivot. Returns false if some pivot column is zero below the
// diagonal.
bool fraction_free_jordan(std::vector<std::vector<LaurentPoly>>& a, std::size_t pivot_cols,
                          std::size_t cols, bool jordan, LaurentPoly& last_pivot, bool& odd_swaps)
{
  const std::size_t n = a.size();
  LaurentPoly prev = 1;
  odd_swaps = false;
  for (std::size_t c = 0; c < pivot_cols; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero())
      ++p;
    if (p == n)
      return false;
    if (p != c) {
      std::swap(a[p], a[c]);
      odd_swaps = !odd_swaps;
    }
    const LaurentPoly piv = a[c][c];
    for (std::size_t i = jordan ? 0 : c + 1; i < n; ++i) {
      if (i == c)
        continue;
      const LaurentPoly lead = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == c)
          continue;
        // Skip work on the trailing columns already eliminated.
        if (!jordan && j < c)
          continue;
        LaurentPoly t = piv * a[i][j];
        if (!lead.is_zero() && !a[c][j].is_zero())
          t -= lead * a[c][j];
        a[i][j] = exact_divide(t, prev);
      }
      a[i][c] = LaurentPoly{};
    }
    prev = piv;
  }
  last_pivot = prev;
  return true;
}

} // namespace

LaurentPoly det_laurent(const LaurentMatrix& m)
{
  if (!m.is_square())
    throw std::invalid_argument("det_laurent: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = m(i, j);
  LaurentPoly d;
  bool odd = false;
  if (!fraction_free_jordan(a, n, n, false, d, odd))
    return {};
  return odd ? -d : d;
}

LaurentMatrix inverse_laurent(const LaurentMatrix& m)
{
  if (!m.is_square())
    throw std::invalid_argument("inverse_laurent: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  LaurentPoly d;
  bool odd = false;
  if (!fraction_free_jordan(a, n, 2 * n, true, d, odd) || !d.is_monomial())
    throw std::domain_error("inverse_laurent: determinant is not a unit of the Laurent ring");
  // Left block is now d*I (row swaps were applied to [M | I] jointly), so
  // the right block divided by d is M^{-1}.
  LaurentMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = exact_divide(a[i][n + j], d);
  return inv;
}

} // namespace pplab
