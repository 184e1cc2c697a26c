#ifndef PPLAB_PARABOLIC_HPP
#define PPLAB_PARABOLIC_HPP

#include "pplab/matrix.hpp"
#include "pplab/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace pplab {

/// Element of SL(V), dim V = N + 1, in the basis e_0..e_N. Parabolic
/// elements (stabilizers of the line through e_0) carry their corner entry a.
class GroupElement {
public:
  static GroupElement identity(unsigned N);
  /// Any determinant-1 matrix; throws std::invalid_argument otherwise.
  static GroupElement from_matrix(RationalMatrix mat);
  /// Determinant-1 matrix whose first column is (a, 0, ..., 0).
  static GroupElement parabolic(RationalMatrix mat);

  const RationalMatrix& mat() const { return mat_; }
  unsigned N() const { return static_cast<unsigned>(mat_.rows() - 1); }
  bool is_parabolic() const { return scalar_.has_value(); }
  const std::optional<Rational>& parabolic_scalar() const { return scalar_; }

  friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
  GroupElement(RationalMatrix mat, std::optional<Rational> a) : mat_(std::move(mat)), scalar_(std::move(a)) {}

  RationalMatrix mat_;
  std::optional<Rational> scalar_;
};

/// Finite-dimensional representation given by its action matrices
/// (column convention: column j is the image of basis vector j).
struct RepAction {
  std::size_t dim = 0;
  std::function<RationalMatrix(const GroupElement&)> action;
};

inline constexpr unsigned kDefaultHeight = 3;

/// Deterministic random parabolic element: a = +-h or +-1/h with
/// 1 <= h <= height, integer first-row entries in [-height, height], lower
/// block a product of integer elementary matrices with one row scaled by
/// 1/a. Throws std::invalid_argument when height == 0 or N == 0.
GroupElement random_parabolic(unsigned N, std::uint64_t seed, unsigned height = kDefaultHeight);

/// Action on V* under (g.f)(v) = f(g^{-1} v): g.x_i = sum_j (g^{-1})_{ij} x_j.
/// Column i of the result holds the coordinates of g.x_i, so the result is
/// the transpose of g^{-1}.
RationalMatrix dual_action_matrix(const GroupElement& g);

/// Induced action on S^n(V*) in the monomial basis of degree n.
RationalMatrix sym_action(const GroupElement& g, unsigned n);

/// sym_action(g, d) for d = 0..n, sharing the work between degrees.
std::vector<RationalMatrix> sym_action_upto(const GroupElement& g, unsigned n);

/// a^{-n}; throws std::invalid_argument for a non-parabolic g.
Rational chi(const GroupElement& g, long n);

/// Action on S^{n-k}(L*) (x) S^k(V*) in the basis xbar_0^{n-k} (x) (degree-k
/// monomials): chi(g, n-k) * sym_action(g, k). Throws std::invalid_argument
/// unless g is parabolic and 1 <= k < n.
RationalMatrix target_rep_action(const GroupElement& g, unsigned n, unsigned k);

RepAction sym_rep(unsigned N, unsigned n);
RepAction target_rep(unsigned N, unsigned n, unsigned k);

/// M * src(g) == dst(g) * M. Throws std::invalid_argument on a shape mismatch.
bool is_equivariant(const RationalMatrix& m, const RepAction& src, const RepAction& dst,
                    const GroupElement& g);
bool intertwines(const RationalMatrix& m, const RationalMatrix& src_action,
                 const RationalMatrix& dst_action);

} // namespace pplab

#endif
