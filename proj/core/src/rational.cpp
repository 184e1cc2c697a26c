#include "pplab/rational.hpp"

#include <stdexcept>

namespace pplab {

Rational parse_rational(std::string_view text)
{
  std::string s(text);
  if (s.empty())
    throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& q)
{
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow(const Rational& q, long e)
{
  if (e < 0) {
    if (is_zero(q))
      throw std::domain_error("zero raised to a negative power");
    return pow(Rational(1) / q, -e);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

} // namespace pplab
