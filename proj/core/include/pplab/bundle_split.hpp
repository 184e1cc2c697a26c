#ifndef PPLAB_BUNDLE_SPLIT_HPP
#define PPLAB_BUNDLE_SPLIT_HPP

#include "pplab/laurent.hpp"
#include "pplab/rational.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pplab {

/// Degrees d_i of a splitting E = O(d_1) + ... + O(d_r) on the projective
/// line, kept sorted in descending order.
class SplittingType {
public:
  SplittingType() = default;
  explicit SplittingType(std::vector<int> degrees);
  static SplittingType uniform(int degree, std::size_t multiplicity);

  const std::vector<int>& degrees() const { return degrees_; }
  std::size_t rank() const { return degrees_.size(); }
  long degree_sum() const;
  std::string to_string() const;  // "{2, 2, 1}"

  friend bool operator==(const SplittingType&, const SplittingType&) = default;

private:
  std::vector<int> degrees_;
};

/// Two-chart cocycle of a bundle on the line: frames over U_0 = {x_0 != 0}
/// (coordinate t) and U_1 = {x_1 != 0} (coordinate s = 1/t) are related by
///   chart-0 coordinates = T(t) * chart-1 coordinates,
/// so O(d) has T = (t^d).
struct TransitionData {
  static constexpr std::string_view convention = "chart0 = T(t) * chart1";

  std::size_t rank = 0;
  LaurentMatrix matrix;
};

/// Transition matrix of Pr^k(O(n)) restricted to the line (1 : t : 0 : ... : 0).
/// Chart-0 jets are Taylor coefficients in u_i = x_i/x_0 at (t, 0, ..., 0);
/// chart-1 jets are Taylor coefficients in (w_0, w_2, ..., w_N), w_j = x_j/x_1,
/// at (1/t, 0, ..., 0). Sections satisfy f_0(u) = u_1^n f_1(w(u)), and the
/// matrix is obtained by expanding u_1^n (w(u) - w*)^beta to order k with
/// Laurent coefficients. Rank is C(N+k, N); both sides use the jet order of
/// jet_basis(N, k). Throws std::invalid_argument for N == 0 or n == 0.
TransitionData jet_transition_matrix(unsigned N, unsigned n, unsigned k);

/// Sample points used by transition_consistency when none are given.
std::vector<Rational> default_sample_points();

/// Independent check of jet_transition_matrix: for every degree-n monomial F
/// and each sample t0 != 0, the chart-0 jet of F at t0 equals T(t0) times the
/// chart-1 jet, both jets being computed from closed binomial expansions.
bool transition_consistency(const TransitionData& T, unsigned N, unsigned n, unsigned k,
                            const std::vector<Rational>& samples = default_sample_points());

/// dim H^0(E(m)): pairs of vector polynomials (f_0(t), f_1(s)) with
/// f_0(t) = t^m T(t) f_1(1/t). Since f_1(1/t) = t^{-m} T^{-1}(t) f_0(t), the
/// degree of f_1 is at most m - (lowest exponent of T^{-1}); the linear
/// system on f_1's coefficients within that bound is solved exactly.
/// Throws std::domain_error if det T is not a unit of Q[t, 1/t].
std::size_t h0_twisted(const TransitionData& T, int m);

/// Birkhoff-Grothendieck splitting type from the first differences
/// #{i : d_i >= -m} = h0(m) - h0(m-1). Throws std::domain_error for a
/// non-unit determinant or if the scan window cannot be closed within the
/// bounds implied by T^{-1}.
SplittingType splitting_type(const TransitionData& T);

/// { n-k repeated C(N+k, N) times }.
SplittingType expected_splitting(unsigned N, unsigned n, unsigned k);

/// splitting_type(jet_transition_matrix(N, n, k)) == expected_splitting(N, n, k).
/// Throws std::invalid_argument unless 1 <= k < n.
bool verify_corollary(unsigned N, unsigned n, unsigned k);

/// {"schema":1,"rank":r,"variable":"t","convention":...,
///  "entries":[[[exp,"num/den"],...],...]} with entries row-major and terms
/// in ascending exponent order.
std::string transition_to_json(const TransitionData& T, int indent = -1);
/// Inverse of transition_to_json; throws std::invalid_argument on bad input.
TransitionData transition_from_json(std::string_view text);

} // namespace pplab

#endif
