#include "ddseries/exact/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>

#include "ddseries/error.hpp"

namespace ddseries::exact {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw PreconditionError("not an integer literal: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  const auto num_text = text.substr(0, slash);
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw PreconditionError("denominator must be unsigned: '" + std::string(text) + "'");
  }
  BigInt num = parse_bigint(num_text);
  BigInt den = parse_bigint(den_text);
  if (den == 0) throw PreconditionError("zero denominator: '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) {
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  mpfr_set_q(tmp, q.get_mpq_t(), MPFR_RNDN);
  const double out = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return out;
}

double to_double(const BigInt& z) {
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  mpfr_set_z(tmp, z.get_mpz_t(), MPFR_RNDN);
  const double out = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return out;
}

double log_of(const BigInt& z) {
  if (z <= 0) throw PreconditionError("log_of requires a positive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, z.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational out(pow(base.get_num(), exponent), pow(base.get_den(), exponent));
  return out;
}

}  // namespace ddseries::exact
