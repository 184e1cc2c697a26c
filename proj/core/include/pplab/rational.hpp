#ifndef PPLAB_RATIONAL_HPP
#define PPLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pplab {

/// Arbitrary-precision exact fraction. gmpxx keeps results of arithmetic
/// canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q"; throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den", e.g. "3/1", "-1/2".
std::string to_fraction_string(const Rational& q);

/// num/den in canonical form. The two-argument mpq_class constructor does
/// not reduce, and GMP arithmetic requires reduced operands.
inline Rational make_rational(const Integer& num, const Integer& den)
{
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// q^e for any integer e; throws std::domain_error for 0^e with e < 0.
Rational pow(const Rational& q, long e);

} // namespace pplab

#endif
