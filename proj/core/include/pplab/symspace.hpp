#ifndef PPLAB_SYMSPACE_HPP
#define PPLAB_SYMSPACE_HPP

#include "pplab/linalg.hpp"
#include "pplab/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace pplab {

/// Exponent vector of a monomial x_0^{p_0} ... x_N^{p_N}.
struct MultiIndex {
  std::vector<unsigned> exponents;

  unsigned degree() const;
  std::size_t num_vars() const { return exponents.size(); }

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

/// Binomial coefficient by Pascal recursion (no factorials).
std::uint64_t binomial(unsigned n, unsigned k);

/// All multi-indices of total degree exactly `degree` in `num_vars` variables,
/// lexicographically descending (x_0 > x_1 > ...): x_0^n comes first.
std::vector<MultiIndex> multi_indices_of_degree(std::size_t num_vars, unsigned degree);

/// All multi-indices of total degree <= `max_degree`, ordered by degree
/// ascending and, within a degree, lexicographically descending. This is the
/// image of the degree-`max_degree` monomial order in num_vars + 1 variables
/// under dropping the first exponent.
std::vector<MultiIndex> multi_indices_up_to(std::size_t num_vars, unsigned max_degree);

/// Ordered monomial basis of S^n(V*), dim V = N + 1.
class MonomialBasis {
public:
  MonomialBasis(unsigned N, unsigned degree);

  unsigned N() const { return N_; }
  std::size_t num_vars() const { return N_ + 1; }
  unsigned degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<MultiIndex>& monomials() const { return monomials_; }
  const MultiIndex& operator[](std::size_t i) const { return monomials_[i]; }

  /// Position of a monomial; throws std::out_of_range if it is not in the basis.
  std::size_t index_of(const MultiIndex& m) const;

private:
  unsigned N_;
  unsigned degree_;
  std::vector<MultiIndex> monomials_;
  std::map<std::vector<unsigned>, std::size_t> index_;
};

/// Shared, immutable basis for (N, n). Requires N >= 1. Thread-safe; the
/// reference stays valid for the life of the process.
const MonomialBasis& monomial_basis(unsigned N, unsigned n);

/// dim S^n(V*): evaluates sum_{i=0}^{n} C(i+N-1, N-1), checks it against the
/// closed form C(n+N, N) and throws std::logic_error if they disagree.
std::uint64_t dim_sym(unsigned N, unsigned n);

/// Degree-n form in N+1 variables, coordinates aligned with its basis.
class PolyVector {
public:
  explicit PolyVector(const MonomialBasis& basis);
  PolyVector(const MonomialBasis& basis, std::vector<Rational> coeffs);

  static PolyVector monomial(const MonomialBasis& basis, const MultiIndex& m,
                             const Rational& c = 1);

  const MonomialBasis& basis() const { return *basis_; }
  unsigned degree() const { return basis_->degree(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;

  friend PolyVector operator+(const PolyVector& a, const PolyVector& b);
  friend PolyVector operator*(const Rational& s, const PolyVector& f);
  friend bool operator==(const PolyVector& a, const PolyVector& b);

private:
  const MonomialBasis* basis_;
  std::vector<Rational> coeffs_;
};

/// d f / d x_var in the degree-(n-1) basis. A degree-0 input must be zero
/// (its derivative is returned as the zero constant); anything else throws
/// std::invalid_argument, as does var > N.
PolyVector partial_derivative(const PolyVector& f, std::size_t var);

/// Matrix of d/dx_var from the degree-n basis to the degree-(n-1) basis.
RationalMatrix derivative_matrix(unsigned N, unsigned n, std::size_t var);

/// Span of the degree-n monomials whose x_0 exponent is below n-k, i.e.
/// m^{k+1} S^{n-k-1}(V*) with m = span(x_1..x_N). Throws
/// std::invalid_argument unless 1 <= k < n.
Subspace m_power_subspace(unsigned N, unsigned n, unsigned k);

/// dim m^{k+1} S^{n-k-1}(V*) as sum_{i=k+1}^{n} C(i+N-1, N-1).
std::uint64_t dim_m_power(unsigned N, unsigned n, unsigned k);

/// Checks dim S^n(V*) - dim m^{k+1}S^{n-k-1}(V*) = C(k+N, N) three ways: by
/// the partial binomial sums, by closed binomials and by counting explicit
/// basis elements. Returns false on any disagreement. Throws
/// std::invalid_argument unless 1 <= k < n.
bool lemma1_identity(unsigned N, unsigned n, unsigned k);

void require_theorem_range(unsigned N, unsigned n, unsigned k);

} // namespace pplab

#endif
