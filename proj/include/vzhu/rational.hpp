#ifndef VZHU_RATIONAL_HPP
#define VZHU_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vzhu {

// mpq_class keeps numerator/denominator canonical after every arithmetic
// operation; the only non-canonical values come from raw string or
// two-integer construction, which go through make_rational below.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "p/q" (or "p" for integers); no decimal point ever appears.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

// Accepts "p", "-p", "p/q". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);

// Requires is_integer(r) and that the value fits in a long.
long to_long(const Rational& r);

// Generalized binomial coefficient binom(top, k) for rational top, k >= 0.
Rational binomial(const Rational& top, long k);
inline Rational binomial(long top, long k) { return binomial(Rational(top), k); }

Rational factorial(long n);

// (-1)^k for any integer k.
inline int sign_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

// Rational power with integer exponent (0^0 = 1).
Rational pow(const Rational& base, long exponent);

}  // namespace vzhu

#endif  // VZHU_RATIONAL_HPP
