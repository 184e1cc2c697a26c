#include "pplab/jetmap.hpp"

#include "pplab/linalg.hpp"

#include <stdexcept>

namespace pplab {

JetBasis jet_basis(unsigned N, unsigned k)
{
  return {N, k, multi_indices_up_to(N, k)};
}

RationalMatrix phi_matrix(unsigned N, unsigned n, unsigned k)
{
  require_theorem_range(N, n, k);
  RationalMatrix m = derivative_matrix(N, n, 0);
  for (unsigned d = n - 1; d > k; --d)
    m = derivative_matrix(N, d, 0) * m;
  return m;
}

RationalMatrix taylor_fiber_matrix(unsigned N, unsigned n, unsigned k)
{
  if (N < 1)
    throw std::invalid_argument("taylor_fiber_matrix: N >= 1 violated");
  if (k > n)
    throw std::invalid_argument("taylor_fiber_matrix: k <= n violated");
  const MonomialBasis& src = monomial_basis(N, n);
  // Jet alpha sits at the position of x_0^{k-|alpha|} x^alpha in degree k.
  const MonomialBasis& jets = monomial_basis(N, k);
  RationalMatrix t(jets.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const MultiIndex& p = src[j];
    const unsigned affine = n - p.exponents[0];
    if (affine > k)
      continue;
    MultiIndex target = p;
    target.exponents[0] = k - affine;
    t(jets.index_of(target), j) = 1;
  }
  return t;
}

std::vector<std::size_t> quotient_section(unsigned N, unsigned n, unsigned k)
{
  require_theorem_range(N, n, k);
  const MonomialBasis& b = monomial_basis(N, n);
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i].exponents[0] >= n - k)
      idx.push_back(i);
  return idx;
}

RationalMatrix quotient_map_matrix(unsigned N, unsigned n, unsigned k)
{
  const RationalMatrix phi = phi_matrix(N, n, k);
  const auto cols = quotient_section(N, n, k);
  std::vector<std::size_t> rows(phi.rows());
  for (std::size_t i = 0; i < rows.size(); ++i)
    rows[i] = i;
  return phi.select(rows, cols);
}

bool verify_kernel(unsigned N, unsigned n, unsigned k)
{
  const Subspace m_power = m_power_subspace(N, n, k);
  return subspace_equal(kernel_basis(phi_matrix(N, n, k)), m_power) &&
         subspace_equal(kernel_basis(taylor_fiber_matrix(N, n, k)), m_power);
}

bool exact_sequence_check(unsigned N, unsigned n, unsigned k)
{
  const RationalMatrix phi = phi_matrix(N, n, k);
  const Subspace m_power = m_power_subspace(N, n, k);
  return m_power.dim() + rank(phi) == dim_sym(N, n) &&
         subspace_equal(kernel_basis(phi), m_power);
}

std::uint64_t trial_seed(std::uint64_t base, unsigned N, unsigned n, unsigned k, std::size_t trial)
{
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t s = mix(base);
  for (std::uint64_t v : {std::uint64_t{N}, std::uint64_t{n}, std::uint64_t{k}, std::uint64_t{trial}})
    s = mix(s ^ v);
  return s;
}

TrialOutcome check_trial(unsigned n, unsigned k, const GroupElement& g)
{
  const unsigned N = g.N();
  const RationalMatrix phi = phi_matrix(N, n, k);
  const auto actions = sym_action_upto(g, n);
  const RationalMatrix& src = actions[n];
  const RationalMatrix dst = chi(g, static_cast<long>(n - k)) * actions[k];

  TrialOutcome out;
  out.phi_equivariant = intertwines(phi, src, dst);

  // The section monomials are a prefix of the basis and ker(phi) is spanned
  // by the remaining ones, so the induced action on the quotient is the
  // section-by-section block of the source action, provided the kernel block
  // maps into the kernel.
  const auto section = quotient_section(N, n, k);
  std::vector<std::size_t> rest;
  for (std::size_t i = section.size(); i < src.rows(); ++i)
    rest.push_back(i);
  out.kernel_invariant = src.select(section, rest).is_zero();

  const RationalMatrix q = quotient_map_matrix(N, n, k);
  out.quotient_equivariant = intertwines(q, src.select(section, section), dst);
  return out;
}

TheoremReport verify_theorem(unsigned N, unsigned n, unsigned k, std::size_t trials,
                             std::uint64_t seed, unsigned height)
{
  require_theorem_range(N, n, k);
  TheoremReport r;
  r.N = N;
  r.n = n;
  r.k = k;

  const RationalMatrix phi = phi_matrix(N, n, k);
  const RationalMatrix taylor = taylor_fiber_matrix(N, n, k);
  const Subspace m_power = m_power_subspace(N, n, k);
  r.kernel_matches = subspace_equal(kernel_basis(phi), m_power);
  r.taylor_kernel_matches = subspace_equal(kernel_basis(taylor), m_power);
  const std::size_t fiber_rank = binomial(k + N, N);
  r.rank_correct = rank(phi) == fiber_rank && rank(taylor) == fiber_rank;

  const RationalMatrix q = quotient_map_matrix(N, n, k);
  bool quotient_ok = q.is_square() && !is_zero(determinant(q));

  r.equivariance_trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const GroupElement g = random_parabolic(N, trial_seed(seed, N, n, k, t), height);
    const TrialOutcome o = check_trial(n, k, g);
    if (!o.phi_equivariant)
      ++r.equivariance_failures;
    if (!o.kernel_invariant || !o.quotient_equivariant)
      quotient_ok = false;
  }
  r.quotient_iso_equivariant = quotient_ok;
  return r;
}

} // namespace pplab
