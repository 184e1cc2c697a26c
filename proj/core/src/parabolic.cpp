#include "pplab/parabolic.hpp"

#include "pplab/linalg.hpp"
#include "pplab/symspace.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>

namespace pplab {

GroupElement GroupElement::identity(unsigned N)
{
  return {RationalMatrix::identity(N + 1), Rational(1)};
}

GroupElement GroupElement::from_matrix(RationalMatrix mat)
{
  if (!mat.is_square() || mat.rows() < 2)
    throw std::invalid_argument("GroupElement: matrix must be square of size >= 2");
  if (determinant(mat) != 1)
    throw std::invalid_argument("GroupElement: determinant is not 1");
  return {std::move(mat), std::nullopt};
}

GroupElement GroupElement::parabolic(RationalMatrix mat)
{
  GroupElement g = from_matrix(std::move(mat));
  for (std::size_t i = 1; i < g.mat_.rows(); ++i)
    if (!is_zero(g.mat_(i, 0)))
      throw std::invalid_argument("GroupElement: first column is not (a, 0, ..., 0)");
  g.scalar_ = g.mat_(0, 0);
  return g;
}

GroupElement operator*(const GroupElement& g, const GroupElement& h)
{
  if (g.mat_.rows() != h.mat_.rows())
    throw std::invalid_argument("GroupElement product: sizes differ");
  std::optional<Rational> a;
  if (g.scalar_ && h.scalar_)
    a = *g.scalar_ * *h.scalar_;
  return {g.mat_ * h.mat_, std::move(a)};
}

namespace {

// Bounded draw straight from the mt19937_64 stream so the sequence is the
// same on every standard library.
long draw(std::mt19937_64& rng, long lo, long hi)
{
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

} // namespace

GroupElement random_parabolic(unsigned N, std::uint64_t seed, unsigned height)
{
  if (height == 0)
    throw std::invalid_argument("random_parabolic: height must be at least 1");
  if (N == 0)
    throw std::invalid_argument("random_parabolic: N must be at least 1");
  std::mt19937_64 rng(seed);
  const long h = height;

  Rational a = draw(rng, 1, h);
  if (draw(rng, 0, 1) == 1)
    a = 1 / a;
  if (draw(rng, 0, 1) == 1)
    a = -a;

  RationalMatrix g(N + 1, N + 1);
  g(0, 0) = a;
  for (unsigned j = 1; j <= N; ++j)
    g(0, j) = draw(rng, -h, h);

  RationalMatrix block = RationalMatrix::identity(N);
  if (N >= 2) {
    for (unsigned step = 0; step < N; ++step) {
      const auto i = static_cast<std::size_t>(draw(rng, 0, N - 1));
      auto j = static_cast<std::size_t>(draw(rng, 0, N - 2));
      if (j >= i)
        ++j;
      RationalMatrix e = RationalMatrix::identity(N);
      e(i, j) = draw(rng, -h, h);
      block = block * e;
    }
  }
  const auto scaled = static_cast<std::size_t>(draw(rng, 0, N - 1));
  for (std::size_t j = 0; j < N; ++j)
    block(scaled, j) /= a;

  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      g(i + 1, j + 1) = block(i, j);
  return GroupElement::parabolic(std::move(g));
}

RationalMatrix dual_action_matrix(const GroupElement& g)
{
  return inverse(g.mat()).transpose();
}

namespace {

// raise[j][v] = index in degree d of x_v times the j-th monomial of degree d-1.
using RaiseTable = std::vector<std::vector<std::size_t>>;

const RaiseTable& raise_table(unsigned N, unsigned d)
{
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<const RaiseTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{N, d}];
  if (!slot) {
    const MonomialBasis& lo = monomial_basis(N, d - 1);
    const MonomialBasis& hi = monomial_basis(N, d);
    auto t = std::make_unique<RaiseTable>(lo.size(), std::vector<std::size_t>(N + 1));
    for (std::size_t j = 0; j < lo.size(); ++j)
      for (unsigned v = 0; v <= N; ++v) {
        MultiIndex m = lo[j];
        ++m.exponents[v];
        (*t)[j][v] = hi.index_of(m);
      }
    slot = std::move(t);
  }
  return *slot;
}

} // namespace

std::vector<RationalMatrix> sym_action_upto(const GroupElement& g, unsigned n)
{
  const unsigned N = g.N();
  const RationalMatrix lin = dual_action_matrix(g);
  std::vector<RationalMatrix> out;
  out.push_back(RationalMatrix::identity(1));
  Rational t;
  for (unsigned d = 1; d <= n; ++d) {
    const MonomialBasis& hi = monomial_basis(N, d);
    const MonomialBasis& lo = monomial_basis(N, d - 1);
    const RaiseTable& raise = raise_table(N, d);
    const RationalMatrix& prev = out.back();
    RationalMatrix cur(hi.size(), hi.size());
    for (std::size_t c = 0; c < hi.size(); ++c) {
      // g.(x_i * m) = (g.x_i) * (g.m) with x_i the first variable present.
      MultiIndex m = hi[c];
      std::size_t i = 0;
      while (m.exponents[i] == 0)
        ++i;
      --m.exponents[i];
      const std::size_t jm = lo.index_of(m);
      for (std::size_t l = 0; l < lo.size(); ++l) {
        const Rational& pl = prev(l, jm);
        if (is_zero(pl))
          continue;
        for (unsigned v = 0; v <= N; ++v) {
          const Rational& lv = lin(v, i);
          if (is_zero(lv))
            continue;
          t = lv * pl;
          cur(raise[l][v], c) += t;
        }
      }
    }
    out.push_back(std::move(cur));
  }
  return out;
}

RationalMatrix sym_action(const GroupElement& g, unsigned n)
{
  return std::move(sym_action_upto(g, n).back());
}

Rational chi(const GroupElement& g, long n)
{
  if (!g.is_parabolic())
    throw std::invalid_argument("chi: element is not parabolic");
  return pow(*g.parabolic_scalar(), -n);
}

RationalMatrix target_rep_action(const GroupElement& g, unsigned n, unsigned k)
{
  require_theorem_range(g.N(), n, k);
  return chi(g, static_cast<long>(n - k)) * sym_action(g, k);
}

RepAction sym_rep(unsigned N, unsigned n)
{
  return {dim_sym(N, n), [n](const GroupElement& g) { return sym_action(g, n); }};
}

RepAction target_rep(unsigned N, unsigned n, unsigned k)
{
  require_theorem_range(N, n, k);
  return {dim_sym(N, k), [n, k](const GroupElement& g) { return target_rep_action(g, n, k); }};
}

bool intertwines(const RationalMatrix& m, const RationalMatrix& src_action,
                 const RationalMatrix& dst_action)
{
  if (!src_action.is_square() || !dst_action.is_square() || m.cols() != src_action.rows() ||
      m.rows() != dst_action.rows())
    throw std::invalid_argument("intertwines: dimension mismatch");
  return m * src_action == dst_action * m;
}

bool is_equivariant(const RationalMatrix& m, const RepAction& src, const RepAction& dst,
                    const GroupElement& g)
{
  if (m.cols() != src.dim || m.rows() != dst.dim)
    throw std::invalid_argument("is_equivariant: matrix does not map src.dim -> dst.dim");
  return intertwines(m, src.action(g), dst.action(g));
}

} // namespace pplab
