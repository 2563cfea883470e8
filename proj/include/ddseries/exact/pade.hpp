#pragma once

#include <span>
#include <vector>

#include "ddseries/exact/rational.hpp"

namespace ddseries::exact {

// P/Q with deg P <= m, deg Q <= n, Q(0) = 1, matching the input series
// through x^{m+n}.
struct PadeApproximant {
  std::vector<Rational> numerator;
  std::vector<Rational> denominator;
  int requested_m = 0;
  int requested_n = 0;
  // Denominator degree actually used; smaller than requested_n when the
  // linear system was singular and had to be reduced.
  int used_n = 0;

  bool reduced() const { return used_n != requested_n; }
  double evaluate(double x) const;
};

// Needs coeffs.size() >= m + n + 1. Solves for the denominator by exact
// Gaussian elimination; singular systems drop n by one until solvable.
PadeApproximant pade(std::span<const Rational> coeffs, int m, int n);

}  // namespace ddseries::exact
