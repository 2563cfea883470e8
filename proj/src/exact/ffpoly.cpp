#include "ddseries/exact/ffpoly.hpp"

#include <algorithm>

#include "ddseries/error.hpp"

namespace ddseries::exact {

FallingFactorialPoly::FallingFactorialPoly(std::map<int, Rational> terms) {
  for (const auto& [dim, c] : terms) set(dim, c);
}

void FallingFactorialPoly::set(int dimensionality, const Rational& coefficient) {
  if (dimensionality < 0) throw PreconditionError("dimensionality must be non-negative");
  if (sgn(coefficient) == 0) {
    terms_.erase(dimensionality);
  } else {
    terms_[dimensionality] = coefficient;
  }
}

std::vector<BigInt> orbit_polynomial(int dimensionality) {
  std::vector<BigInt> poly{BigInt(1)};
  for (int j = 0; j < dimensionality; ++j) {
    // multiply by (X - 2j)
    std::vector<BigInt> next(poly.size() + 1, BigInt(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * (2 * j);
    }
    poly = std::move(next);
  }
  return poly;
}

BigInt orbit_size(int d, int dimensionality) {
  BigInt out = 1;
  for (int j = 0; j < dimensionality; ++j) out *= (2 * d - 2 * j);
  return out;
}

std::vector<LaurentTerm> FallingFactorialPoly::expand() const {
  std::map<int, Rational> by_x_power;
  for (const auto& [dim, f] : terms_) {
    const auto poly = orbit_polynomial(dim);
    for (std::size_t p = 0; p < poly.size(); ++p) {
      if (poly[p] == 0) continue;
      by_x_power[static_cast<int>(p)] += f * poly[p];
    }
  }
  std::vector<LaurentTerm> out;
  for (const auto& [p, c] : by_x_power) {
    if (sgn(c) != 0) out.emplace_back(-p, c);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

FallingFactorialPoly FallingFactorialPoly::from_expansion(const std::vector<LaurentTerm>& terms) {
  std::map<int, Rational> remaining;  // keyed by power of X
  for (const auto& [s_power, c] : terms) {
    if (s_power > 0) throw PreconditionError("falling-factorial form needs non-positive powers of s");
    remaining[-s_power] += c;
  }
  FallingFactorialPoly out;
  // Peel off the top degree repeatedly; each orbit polynomial is monic.
  while (!remaining.empty()) {
    auto top = std::prev(remaining.end());
    if (sgn(top->second) == 0) {
      remaining.erase(top);
      continue;
    }
    const int dim = top->first;
    const Rational lead = top->second;
    out.set(dim, lead);
    const auto poly = orbit_polynomial(dim);
    for (std::size_t p = 0; p < poly.size(); ++p) {
      if (poly[p] != 0) remaining[static_cast<int>(p)] -= lead * poly[p];
    }
    for (auto it = remaining.begin(); it != remaining.end();) {
      it = sgn(it->second) == 0 ? remaining.erase(it) : std::next(it);
    }
  }
  return out;
}

Rational FallingFactorialPoly::evaluate(int d) const {
  Rational total = 0;
  for (const auto& [dim, f] : terms_) total += f * orbit_size(d, dim);
  return total;
}

}  // namespace ddseries::exact
