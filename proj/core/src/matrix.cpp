#include "pplab/matrix.hpp"

#include <stdexcept>
#include <string>

namespace pplab {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
  : rows_(rows), cols_(cols), entries_(rows * cols)
{
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
  : rows_(rows), cols_(cols), entries_(std::move(entries))
{
  if (entries_.size() != rows * cols)
    throw std::invalid_argument("RationalMatrix: expected " + std::to_string(rows * cols) +
                                " entries, got " + std::to_string(entries_.size()));
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
  : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw std::invalid_argument("RationalMatrix: ragged initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const
{
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

bool RationalMatrix::is_zero() const
{
  for (const auto& e : entries_)
    if (!pplab::is_zero(e))
      return false;
  return true;
}

RationalMatrix RationalMatrix::row_block(std::size_t first, std::size_t count) const
{
  if (first + count > rows_)
    throw std::out_of_range("row_block: range exceeds matrix");
  return {count, cols_,
          std::vector<Rational>(entries_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
                                entries_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_))};
}

RationalMatrix RationalMatrix::select(std::span<const std::size_t> row_idx,
                                      std::span<const std::size_t> col_idx) const
{
  RationalMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      s(i, j) = (*this)(row_idx[i], col_idx[j]);
  return s;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product: inner dimensions differ");
  RationalMatrix c(a.rows(), b.cols());
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Rational& ail = a(i, l);
      if (is_zero(ail))
        continue;
      auto brow = b.row(l);
      auto crow = c.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (is_zero(brow[j]))
          continue;
        t = ail * brow[j];
        crow[j] += t;
      }
    }
  }
  return c;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& m)
{
  std::vector<Rational> e(m.entries());
  for (auto& x : e)
    x *= s;
  return {m.rows(), m.cols(), std::move(e)};
}

namespace {

template <class Op>
RationalMatrix elementwise(const RationalMatrix& a, const RationalMatrix& b, Op op)
{
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum: shapes differ");
  std::vector<Rational> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = op(a.entries()[i], b.entries()[i]);
  return {a.rows(), a.cols(), std::move(e)};
}

} // namespace

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b)
{
  return elementwise(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b)
{
  return elementwise(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}

std::vector<Rational> operator*(const RationalMatrix& a, std::span<const Rational> v)
{
  if (a.cols() != v.size())
    throw std::invalid_argument("matrix-vector product: dimension mismatch");
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j)) && !is_zero(v[j]))
        out[i] += a(i, j) * v[j];
  return out;
}

} // namespace pplab
