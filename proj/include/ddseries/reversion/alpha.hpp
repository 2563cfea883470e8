#pragma once

#include <vector>

#include "ddseries/exact/rational.hpp"
#include "ddseries/exact/series.hpp"
#include "ddseries/reversion/ctable.hpp"

namespace ddseries::reversion {

// alpha_1 .. alpha_order, the coefficients of beta = sum_n alpha_n s^n.
struct AlphaSeries {
  std::vector<Rational> values;  // values[n - 1] = alpha_n

  int order() const { return static_cast<int>(values.size()); }
  const Rational& operator()(int n) const { return values.at(static_cast<std::size_t>(n - 1)); }
  friend bool operator==(const AlphaSeries&, const AlphaSeries&) = default;
};

// Closed multinomial sum over multi-indices (n_{a,b}) with
// n = 1 + sum b n_{a,b}:
//   alpha_n = sum [sum a n]! / ([prod n!] [1 + sum (a-1) n]!) prod c^n.
AlphaSeries alpha_via_lemma(const CTable& table, int n_max);

// beta <- s [1 + sum c_{a,b} beta^a s^{b-a}] from beta = 0 until the
// truncated series stops changing.
AlphaSeries alpha_via_iteration(const CTable& table, int n_max);
// The iterate after a fixed number of passes (for inspecting convergence);
// the returned series has order n_max in s with zero constant term.
exact::PowerSeries iterate_beta(const CTable& table, int n_max, int passes);

// Lagrange-Buermann route: revert beta / phi(beta) with phi's coefficients
// held as Laurent polynomials in s, then collect total s-degree.
AlphaSeries alpha_via_lagrange(const CTable& table, int n_max);

}  // namespace ddseries::reversion
