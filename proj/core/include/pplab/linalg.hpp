#ifndef PPLAB_LINALG_HPP
#define PPLAB_LINALG_HPP

#include "pplab/matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace pplab {

struct RrefResult {
  RationalMatrix matrix;             // same shape as the input, zero rows last
  std::vector<std::size_t> pivots;   // strictly increasing pivot columns
  std::size_t rank = 0;
};

/// Reduced row-echelon form.
///
/// Rows are first scaled to integers and reduced to echelon form by
/// fraction-free (Bareiss) elimination, with the pivot taken as the first
/// nonzero entry of the current column. A final pass over the rationals
/// normalises pivots to 1 and clears the entries above them.
RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Exact determinant by fraction-free elimination. Throws
/// std::invalid_argument for non-square input.
Rational determinant(const RationalMatrix& m);

/// Exact inverse via Gauss-Jordan on [M | I]. Throws std::invalid_argument
/// for non-square input and std::domain_error if M is singular.
RationalMatrix inverse(const RationalMatrix& m);

/// A linear subspace of Q^ambient_dim stored canonically: its basis is the
/// nonzero part of the RREF of any spanning set, so two subspaces are equal
/// exactly when their bases compare equal.
class Subspace {
public:
  /// Span of the rows of `generators` (zero rows allowed).
  static Subspace span(const RationalMatrix& generators);
  static Subspace span(std::size_t ambient_dim, const std::vector<std::vector<Rational>>& generators);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const RationalMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

private:
  Subspace(std::size_t ambient_dim, RationalMatrix basis, std::vector<std::size_t> pivots)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_dim_ = 0;
  RationalMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {v : M v = 0}; ambient dimension is cols(M).
Subspace kernel_basis(const RationalMatrix& m);

/// Column space of M as a subspace of Q^rows(M).
Subspace image(const RationalMatrix& m);

/// Throws std::invalid_argument when the ambient dimensions differ.
bool subspace_equal(const Subspace& a, const Subspace& b);

} // namespace pplab

#endif
