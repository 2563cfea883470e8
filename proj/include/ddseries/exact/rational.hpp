#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ddseries::exact {

using BigInt = mpz_class;
// gmpxx keeps mpq_class canonical after every arithmetic operator, which is
// the eager normalization we want.
using Rational = mpq_class;

// "num/den" with decimal integers; the denominator is always written.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Accepts "n" or "n/d" (optional leading '-'); rejects anything else and
// zero denominators with PreconditionError.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

// Correctly rounded conversion (mpq_get_d truncates).
double to_double(const Rational& q);
double to_double(const BigInt& z);
// Natural log of a positive big integer without overflow.
double log_of(const BigInt& z);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt pow(const BigInt& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);

// Canonicalized num/den (mpq_class's two-argument constructor does not reduce).
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace ddseries::exact
