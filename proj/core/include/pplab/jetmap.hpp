#ifndef PPLAB_JETMAP_HPP
#define PPLAB_JETMAP_HPP

#include "pplab/matrix.hpp"
#include "pplab/parabolic.hpp"
#include "pplab/symspace.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pplab {

/// Taylor coordinates of order <= k in the affine variables u_1..u_N at the
/// base point [e_0]. Ordered so that alpha corresponds to the degree-k
/// monomial x_0^{k-|alpha|} x^alpha in the fixed monomial order.
struct JetBasis {
  unsigned N = 0;
  unsigned k = 0;
  std::vector<MultiIndex> multi_indices;

  std::size_t size() const { return multi_indices.size(); }
};

JetBasis jet_basis(unsigned N, unsigned k);

/// f -> d^{n-k} f / dx_0^{n-k}, from the degree-n to the degree-k monomial
/// basis. The tensor factor xbar_0^{n-k} is fixed and carries no coordinate.
/// Throws std::invalid_argument unless 1 <= k < n.
RationalMatrix phi_matrix(unsigned N, unsigned n, unsigned k);

/// F -> coefficients of u^alpha, |alpha| <= k, in F(1, u_1, ..., u_N).
/// Plain coefficients are used rather than derivatives, which only rescales
/// rows by nonzero factorials. Throws std::invalid_argument unless k <= n.
RationalMatrix taylor_fiber_matrix(unsigned N, unsigned n, unsigned k);

/// Indices of the degree-n monomials with x_0 exponent >= n-k. They form a
/// complement of the kernel of phi and come first in the monomial order.
std::vector<std::size_t> quotient_section(unsigned N, unsigned n, unsigned k);

/// phi restricted to the section: the induced map S^n(V*)/ker(phi) -> target.
RationalMatrix quotient_map_matrix(unsigned N, unsigned n, unsigned k);

/// ker(phi) == m^{k+1}S^{n-k-1}(V*) == ker(taylor fiber map), as canonical
/// subspaces.
bool verify_kernel(unsigned N, unsigned n, unsigned k);

/// dim m^{k+1}S^{n-k-1}(V*) + rank(phi) == dim S^n(V*), and the subspace is
/// exactly ker(phi).
bool exact_sequence_check(unsigned N, unsigned n, unsigned k);

struct TheoremReport {
  unsigned N = 0;
  unsigned n = 0;
  unsigned k = 0;
  bool kernel_matches = false;         // ker(phi) == m-power subspace
  bool taylor_kernel_matches = false;  // ker(taylor) == m-power subspace
  bool rank_correct = false;           // rank(phi) == rank(taylor) == C(k+N, N)
  std::size_t equivariance_trials = 0;
  std::size_t equivariance_failures = 0;
  bool quotient_iso_equivariant = false;

  bool passed() const
  {
    return kernel_matches && taylor_kernel_matches && rank_correct && equivariance_failures == 0 &&
           quotient_iso_equivariant;
  }
};

/// Seed for trial `trial` of the triple (N, n, k) derived from a base seed
/// (splitmix64 mixing), so every trial is reproducible on its own.
std::uint64_t trial_seed(std::uint64_t base, unsigned N, unsigned n, unsigned k, std::size_t trial);

/// Runs the kernel, rank and equivariance checks for 1 <= k < n. Failures
/// are recorded in the report; only an invalid range throws.
TheoremReport verify_theorem(unsigned N, unsigned n, unsigned k, std::size_t trials,
                             std::uint64_t seed, unsigned height = kDefaultHeight);

/// Equivariance of phi and of the induced quotient map for a single group
/// element. Exposed so callers can check hand-picked elements.
struct TrialOutcome {
  bool phi_equivariant = false;
  bool kernel_invariant = false;
  bool quotient_equivariant = false;
};
TrialOutcome check_trial(unsigned n, unsigned k, const GroupElement& g);

} // namespace pplab

#endif
