#pragma once

#include <map>
#include <optional>
#include <string>

#include "ddseries/exact/rational.hpp"
#include "ddseries/exact/series.hpp"

namespace ddseries::exact {

// Finite Laurent polynomial sum_p c_p s^p with rational coefficients.
// Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c, int power = 0) { add_term(power, c); }  // NOLINT(implicit)

  static LaurentPoly monomial(int power, const Rational& c) { return LaurentPoly(c, power); }

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int power) const;
  std::optional<int> lowest_power() const;

  void add_term(int power, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly scaled(const Rational& k) const;

  std::string to_string() const;

 private:
  std::map<int, Rational> terms_;
};

template <>
struct RingTraits<LaurentPoly> {
  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return LaurentPoly(Rational(1)); }
  static bool is_zero(const LaurentPoly& v) { return v.is_zero(); }
  // Only nonzero monomials are units.
  static std::optional<LaurentPoly> unit_inverse(const LaurentPoly& v) {
    if (v.terms().size() != 1) return std::nullopt;
    const auto& [power, c] = *v.terms().begin();
    return LaurentPoly::monomial(-power, Rational(1 / c));
  }
  static LaurentPoly scale(const LaurentPoly& v, const Rational& k) { return v.scaled(k); }
};

}  // namespace ddseries::exact
