#pragma once

#include <gmpxx.h>

#include <string>

#include "gwloc/errors.hpp"

namespace gwloc {

// Exact rational numbers. mpq_class keeps the canonical form the engine
// relies on: gcd(|num|, den) = 1 and den > 0.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational makeRational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "-p" or "p/q". Rejects anything else.
Rational parseRational(const std::string& text);

// Canonical "p" or "p/q" with no whitespace.
std::string rationalToString(const Rational& q);

inline bool isInteger(const Rational& q) { return q.get_den() == 1; }

inline Integer floorRational(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

inline Integer ceilRational(const Rational& q) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return c;
}

// Fractional part <q> = q - floor(q), in [0, 1).
inline Rational fracPart(const Rational& q) {
  return q - Rational(floorRational(q));
}

Rational powRational(const Rational& base, long exp);

Integer factorial(unsigned long n);

// (2n-1)!! with the usual convention (-1)!! = 1.
Integer doubleFactorialOdd(long n);

Integer binomial(unsigned long n, unsigned long k);

inline long toLong(const Integer& z) {
  require(z.fits_slong_p(), "integer out of machine range");
  return z.get_si();
}

}  // namespace gwloc
