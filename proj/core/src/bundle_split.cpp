#include "pplab/bundle_split.hpp"

#include "pplab/linalg.hpp"
#include "pplab/symspace.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace pplab {

SplittingType::SplittingType(std::vector<int> degrees) : degrees_(std::move(degrees))
{
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

SplittingType SplittingType::uniform(int degree, std::size_t multiplicity)
{
  return SplittingType(std::vector<int>(multiplicity, degree));
}

long SplittingType::degree_sum() const
{
  return std::accumulate(degrees_.begin(), degrees_.end(), 0L);
}

std::string SplittingType::to_string() const
{
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    os << (i ? ", " : "") << degrees_[i];
  os << "}";
  return os.str();
}

namespace {

// Power series in N variables truncated above total degree k, with Laurent
// polynomial coefficients in t. Coordinates follow jet_basis(N, k).
class JetSeries {
public:
  struct Layout {
    std::vector<MultiIndex> terms;
    std::map<std::vector<unsigned>, std::size_t> index;
    unsigned k = 0;
  };

  explicit JetSeries(const Layout& layout) : layout_(&layout), c_(layout.terms.size()) {}

  static JetSeries constant(const Layout& layout, const LaurentPoly& c)
  {
    JetSeries s(layout);
    s.c_[0] = c;
    return s;
  }

  static JetSeries variable(const Layout& layout, std::size_t var, const LaurentPoly& c)
  {
    JetSeries s(layout);
    if (layout.k >= 1) {
      std::vector<unsigned> e(layout.terms[0].exponents.size(), 0);
      e[var] = 1;
      s.c_[layout.index.at(e)] = c;
    }
    return s;
  }

  const LaurentPoly& operator[](std::size_t i) const { return c_[i]; }
  std::size_t size() const { return c_.size(); }

  JetSeries& operator+=(const JetSeries& o)
  {
    for (std::size_t i = 0; i < c_.size(); ++i)
      c_[i] += o.c_[i];
    return *this;
  }

  friend JetSeries operator*(const JetSeries& a, const JetSeries& b)
  {
    const Layout& L = *a.layout_;
    JetSeries out(L);
    std::vector<unsigned> sum;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero())
        continue;
      const unsigned di = L.terms[i].degree();
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero() || di + L.terms[j].degree() > L.k)
          continue;
        sum = L.terms[i].exponents;
        for (std::size_t v = 0; v < sum.size(); ++v)
          sum[v] += L.terms[j].exponents[v];
        out.c_[L.index.at(sum)] += a.c_[i] * b.c_[j];
      }
    }
    return out;
  }

  JetSeries pow(unsigned e) const
  {
    JetSeries r = constant(*layout_, 1);
    for (unsigned i = 0; i < e; ++i)
      r = r * *this;
    return r;
  }

private:
  const Layout* layout_;
  std::vector<LaurentPoly> c_;
};

JetSeries::Layout make_layout(unsigned N, unsigned k)
{
  JetSeries::Layout L;
  L.terms = multi_indices_up_to(N, k);
  L.k = k;
  for (std::size_t i = 0; i < L.terms.size(); ++i)
    L.index.emplace(L.terms[i].exponents, i);
  return L;
}

Rational binom_q(unsigned n, unsigned k)
{
  return Rational(static_cast<unsigned long>(binomial(n, k)));
}

} // namespace

TransitionData jet_transition_matrix(unsigned N, unsigned n, unsigned k)
{
  if (N < 1)
    throw std::invalid_argument("jet_transition_matrix: N >= 1 violated");
  if (n < 1)
    throw std::invalid_argument("jet_transition_matrix: n >= 1 violated");
  const JetSeries::Layout L = make_layout(N, k);

  // Local coordinates r = u - (t, 0, ..., 0) in chart 0.
  // rho = 1 / (1 + r_1/t), truncated.
  JetSeries rho(L);
  const JetSeries r1_over_t = JetSeries::variable(L, 0, LaurentPoly::monomial(-1, -1));
  {
    JetSeries term = JetSeries::constant(L, 1);
    for (unsigned i = 0; i <= k; ++i) {
      rho += term;
      term = term * r1_over_t;
    }
  }
  // u_1^n = (t + r_1)^n.
  JetSeries u1 = JetSeries::constant(L, LaurentPoly::monomial(1, 1));
  u1 += JetSeries::variable(L, 0, 1);
  const JetSeries u1n = u1.pow(n);

  // w_0 - 1/t = -(r_1 / t^2) rho,  w_j = (r_j / t) rho for j >= 2.
  std::vector<JetSeries> dw;
  dw.push_back(JetSeries::variable(L, 0, LaurentPoly::monomial(-1, -2)) * rho);
  for (unsigned v = 1; v < N; ++v)
    dw.push_back(JetSeries::variable(L, v, LaurentPoly::monomial(1, -1)) * rho);

  TransitionData T;
  T.rank = L.terms.size();
  T.matrix = LaurentMatrix(T.rank, T.rank);
  for (std::size_t col = 0; col < T.rank; ++col) {
    JetSeries s = u1n;
    const MultiIndex& beta = L.terms[col];
    for (unsigned v = 0; v < N; ++v)
      if (beta.exponents[v] > 0)
        s = s * dw[v].pow(beta.exponents[v]);
    for (std::size_t row = 0; row < T.rank; ++row)
      T.matrix(row, col) = s[row];
  }
  return T;
}

std::vector<Rational> default_sample_points()
{
  return {Rational(1), Rational(2), Rational(-1, 3)};
}

bool transition_consistency(const TransitionData& T, unsigned N, unsigned n, unsigned k,
                            const std::vector<Rational>& samples)
{
  const std::vector<MultiIndex> jets = multi_indices_up_to(N, k);
  if (T.rank != jets.size() || T.matrix.rows() != T.rank || T.matrix.cols() != T.rank)
    return false;
  const MonomialBasis& forms = monomial_basis(N, n);

  for (const Rational& t0 : samples) {
    if (is_zero(t0))
      throw std::invalid_argument("transition_consistency: sample point must be nonzero");
    const RationalMatrix Tt = T.matrix.evaluate(t0);
    for (const MultiIndex& p : forms.monomials()) {
      // Chart 0: F(1, u) = u_1^{p_1} u_2^{p_2} ... expanded at u_1 = t0.
      // Chart 1: F(w_0, 1, w_2, ...) = w_0^{p_0} w_2^{p_2} ... at w_0 = 1/t0.
      std::vector<Rational> jet0(jets.size()), jet1(jets.size());
      for (std::size_t a = 0; a < jets.size(); ++a) {
        const auto& e = jets[a].exponents;
        bool tail = true;
        for (unsigned v = 1; v < N; ++v)
          tail = tail && e[v] == p.exponents[v + 1];
        if (!tail)
          continue;
        if (e[0] <= p.exponents[1])
          jet0[a] = binom_q(p.exponents[1], e[0]) * pow(t0, static_cast<long>(p.exponents[1] - e[0]));
        if (e[0] <= p.exponents[0])
          jet1[a] = binom_q(p.exponents[0], e[0]) * pow(t0, -static_cast<long>(p.exponents[0] - e[0]));
      }
      if (Tt * std::span<const Rational>(jet1) != jet0)
        return false;
    }
  }
  return true;
}

namespace {

struct Cocycle {
  const TransitionData* T;
  int inverse_low = 0;    // lowest exponent of T^{-1}
  int det_exponent = 0;
};

Cocycle analyse(const TransitionData& T)
{
  if (T.matrix.rows() != T.rank || T.matrix.cols() != T.rank)
    throw std::invalid_argument("transition data: matrix is not rank x rank");
  Cocycle c{&T};
  if (T.rank == 0)
    return c;
  const LaurentPoly det = det_laurent(T.matrix);
  if (!det.is_monomial())
    throw std::domain_error("transition data: determinant " + det.to_string() +
                            " is not a unit of Q[t, 1/t]");
  c.det_exponent = det.min_exponent();
  c.inverse_low = *inverse_laurent(T.matrix).min_exponent();
  return c;
}

std::size_t h0(const Cocycle& c, int m)
{
  const TransitionData& T = *c.T;
  const std::size_t r = T.rank;
  if (r == 0)
    return 0;
  const int bound = m - c.inverse_low;
  if (bound < 0)
    return 0;
  const std::size_t D = static_cast<std::size_t>(bound);
  const std::size_t unknowns = r * (D + 1);

  // Unknown (j, beta) is the coefficient of s^j in component beta of f_1.
  // Row (alpha, E) collects the coefficient of t^E, E < 0, in component
  // alpha of t^m T(t) f_1(1/t); all of them must vanish.
  std::map<std::pair<std::size_t, int>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  for (std::size_t alpha = 0; alpha < r; ++alpha)
    for (std::size_t beta = 0; beta < r; ++beta)
      for (const auto& [p, coef] : T.matrix(alpha, beta).terms())
        for (std::size_t j = 0; j <= D; ++j) {
          const int E = m + p - static_cast<int>(j);
          if (E >= 0)
            continue;
          auto [it, fresh] = row_of.try_emplace({alpha, E}, rows.size());
          if (fresh)
            rows.emplace_back();
          rows[it->second].emplace_back(j * r + beta, coef);
        }
  if (rows.empty())
    return unknowns;
  RationalMatrix A(rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [col, coef] : rows[i])
      A(i, col) += coef;
  return unknowns - rank(A);
}

long floor_div(long a, long b)
{
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

} // namespace

std::size_t h0_twisted(const TransitionData& T, int m)
{
  return h0(analyse(T), m);
}

SplittingType splitting_type(const TransitionData& T)
{
  const Cocycle c = analyse(T);
  const long r = static_cast<long>(T.rank);
  if (r == 0)
    return {};

  std::map<int, std::size_t> memo;
  auto h = [&](int m) {
    auto it = memo.find(m);
    if (it == memo.end())
      it = memo.emplace(m, h0(c, m)).first;
    return static_cast<long>(it->second);
  };
  auto diff = [&](int m) { return h(m) - h(m - 1); };

  // h0(m) = 0 whenever m < inverse_low, so every d_i <= -inverse_low, and
  // then d_i >= det_exponent - (r - 1) * (-inverse_low).
  const long d_max_bound = -c.inverse_low;
  const long d_min_bound = c.det_exponent - (r - 1) * d_max_bound;

  // The mean degree e/r lies between d_min and d_max; widen outwards.
  int top = static_cast<int>(-floor_div(c.det_exponent, r));
  while (diff(top) < r) {
    if (top > -d_min_bound)
      throw std::domain_error("splitting_type: upper end of the scan window did not stabilise");
    ++top;
  }
  int bottom = static_cast<int>(floor_div(-c.det_exponent, r)) - 1;
  while (diff(bottom) > 0) {
    if (bottom < -d_max_bound - 1)
      throw std::domain_error("splitting_type: lower end of the scan window did not stabilise");
    --bottom;
  }

  std::vector<int> degrees;
  for (int m = bottom + 1; m <= top; ++m) {
    const long count = diff(m) - diff(m - 1);
    if (count < 0)
      throw std::logic_error("splitting_type: first differences of h0 are not monotone");
    degrees.insert(degrees.end(), static_cast<std::size_t>(count), -m);
  }
  SplittingType st(std::move(degrees));
  if (static_cast<long>(st.rank()) != r || st.degree_sum() != c.det_exponent)
    throw std::logic_error("splitting_type: degrees inconsistent with rank or determinant");
  return st;
}

SplittingType expected_splitting(unsigned N, unsigned n, unsigned k)
{
  return SplittingType::uniform(static_cast<int>(n) - static_cast<int>(k), binomial(N + k, N));
}

bool verify_corollary(unsigned N, unsigned n, unsigned k)
{
  require_theorem_range(N, n, k);
  return splitting_type(jet_transition_matrix(N, n, k)) == expected_splitting(N, n, k);
}

std::string transition_to_json(const TransitionData& T, int indent)
{
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& p : T.matrix.entries()) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms())
      terms.push_back({e, to_fraction_string(c)});
    entries.push_back(std::move(terms));
  }
  nlohmann::json j;
  j["schema"] = 1;
  j["rank"] = T.rank;
  j["variable"] = "t";
  j["convention"] = std::string(TransitionData::convention);
  j["entries"] = std::move(entries);
  return j.dump(indent);
}

TransitionData transition_from_json(std::string_view text)
{
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.at("variable").get<std::string>() != "t")
      throw std::invalid_argument("transition JSON: variable must be \"t\"");
    TransitionData T;
    T.rank = j.at("rank").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != T.rank * T.rank)
      throw std::invalid_argument("transition JSON: expected rank*rank entries");
    T.matrix = LaurentMatrix(T.rank, T.rank);
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (const auto& term : entries[i]) {
        if (!term.is_array() || term.size() != 2)
          throw std::invalid_argument("transition JSON: term must be [exp, \"num/den\"]");
        T.matrix(i / T.rank, i % T.rank)
          .add_term(term[0].get<int>(), parse_rational(term[1].get<std::string>()));
      }
    return T;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("transition JSON: ") + e.what());
  }
}

} // namespace pplab
