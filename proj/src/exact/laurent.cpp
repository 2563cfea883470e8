#include "ddseries/exact/laurent.hpp"

namespace ddseries::exact {

Rational LaurentPoly::coefficient(int power) const {
  const auto it = terms_.find(power);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> LaurentPoly::lowest_power() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

void LaurentPoly::add_term(int power, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, Rational(-c));
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out;
  for (const auto& [p, c] : a.terms_) out.terms_.emplace(p, Rational(-c));
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) out.add_term(pa + pb, Rational(ca * cb));
  }
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& k) const {
  LaurentPoly out;
  if (sgn(k) == 0) return out;
  for (const auto& [p, c] : terms_) out.terms_.emplace(p, Rational(c * k));
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + exact::to_string(c) + ")s^" + std::to_string(p);
  }
  return out;
}

}  // namespace ddseries::exact
