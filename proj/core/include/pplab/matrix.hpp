#ifndef PPLAB_MATRIX_HPP
#define PPLAB_MATRIX_HPP

#include "pplab/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pplab {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<Rational> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
  std::span<const Rational> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }

  const std::vector<Rational>& entries() const { return entries_; }

  RationalMatrix transpose() const;
  bool is_zero() const;

  /// Rows [first, first + count) as a new matrix.
  RationalMatrix row_block(std::size_t first, std::size_t count) const;
  /// Sub-matrix on the given row and column index lists.
  RationalMatrix select(std::span<const std::size_t> row_idx,
                        std::span<const std::size_t> col_idx) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Product that skips zero entries; throws std::invalid_argument on a shape
/// mismatch.
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& m);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);

std::vector<Rational> operator*(const RationalMatrix& a, std::span<const Rational> v);

} // namespace pplab

#endif
