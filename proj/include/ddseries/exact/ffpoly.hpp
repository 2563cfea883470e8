#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ddseries/exact/rational.hpp"

namespace ddseries::exact {

// A (power of s, coefficient) pair; s = 1/(2d).
using LaurentTerm = std::pair<int, Rational>;

// sum_D f_D * 2d (2d-2) ... (2d-2D+2), a polynomial in the symbol X = 2d
// written in the falling-factorial basis that orbit counting produces.
class FallingFactorialPoly {
 public:
  FallingFactorialPoly() = default;
  explicit FallingFactorialPoly(std::map<int, Rational> terms);

  const std::map<int, Rational>& terms() const { return terms_; }
  void set(int dimensionality, const Rational& coefficient);

  // Monomial expansion in X = 2d = 1/s. Returns (power of s, coefficient)
  // pairs sorted by power with zero coefficients dropped; powers are <= 0.
  std::vector<LaurentTerm> expand() const;

  // Inverse of expand(): rebuild the falling-factorial form from monomials.
  static FallingFactorialPoly from_expansion(const std::vector<LaurentTerm>& terms);

  Rational evaluate(int d) const;

  friend bool operator==(const FallingFactorialPoly&, const FallingFactorialPoly&) = default;

 private:
  std::map<int, Rational> terms_;
};

// Coefficients (index = power of X) of X (X-2) ... (X-2D+2).
std::vector<BigInt> orbit_polynomial(int dimensionality);
// 2d (2d-2) ... (2d-2D+2) evaluated; zero once D > d.
BigInt orbit_size(int d, int dimensionality);

}  // namespace ddseries::exact
