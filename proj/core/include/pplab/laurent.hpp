#ifndef PPLAB_LAURENT_HPP
#define PPLAB_LAURENT_HPP

#include "pplab/matrix.hpp"
#include "pplab/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pplab {

/// Laurent polynomial in one variable t with rational coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c) { add_term(0, c); } // NOLINT: implicit constant
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}   // NOLINT

  static LaurentPoly monomial(const Rational& c, int exponent);
  static LaurentPoly from_terms(const Terms& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  /// Smallest / largest exponent; throws std::domain_error on zero.
  int min_exponent() const;
  int max_exponent() const;

  /// Coefficient of t^e (zero when absent).
  Rational coeff(int e) const;

  void add_term(int exponent, const Rational& c);

  Rational evaluate(const Rational& t) const;
  LaurentPoly shifted(int by) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

private:
  Terms terms_;
};

/// a / b when b divides a in Q[t, 1/t]; throws std::domain_error otherwise.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

class LaurentMatrix {
public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  LaurentMatrix(std::initializer_list<std::initializer_list<LaurentPoly>> rows);

  static LaurentMatrix identity(std::size_t n);
  static LaurentMatrix diagonal(const std::vector<LaurentPoly>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  LaurentPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<LaurentPoly>& entries() const { return entries_; }

  /// Exponent range over all nonzero entries; nullopt for the zero matrix.
  std::optional<int> min_exponent() const;
  std::optional<int> max_exponent() const;

  RationalMatrix evaluate(const Rational& t) const;

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> entries_;
};

/// Exact determinant by fraction-free elimination over Q[t, 1/t].
/// Throws std::invalid_argument for non-square input.
LaurentPoly det_laurent(const LaurentMatrix& m);

/// Inverse of a matrix whose determinant is a unit c*t^e of the Laurent
/// ring. Throws std::domain_error when the determinant is not a unit.
LaurentMatrix inverse_laurent(const LaurentMatrix& m);

} // namespace pplab

#endif
