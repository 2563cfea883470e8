#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ddseries/exact/series.hpp"

namespace ddseries::spherical {

using exact::PowerSeries;
using exact::Rational;

// sum_k (x/2)^{2k} / (k!)^2 through x^order.
PowerSeries i0_series(int order);
// g(x) = x - log I_0(x) through x^order; order >= 2.
PowerSeries g_series(int order);
// Coefficients a_1 .. a_order of g^{-1}(t) = sum a_n t^n (index 0 holds a_0 = 0).
std::vector<Rational> a_coefficients(int order);

struct SphericalSeries {
  PowerSeries g;
  PowerSeries g_inverse;
  int order = 0;
};
SphericalSeries spherical_series(int order);

struct SignRuns {
  std::vector<std::pair<int, int>> runs;  // (sign, length)
  std::optional<int> zero_at;             // first index n with a_n == 0, which ends the scan
  int examined = 0;                       // number of coefficients scanned

  // Run lengths without signs; the last run may be cut by the examined range.
  std::vector<int> lengths() const;
};

// Run-length encoding of the signs of a[first..]. Indexing follows a, so pass
// first = 1 for a coefficient list with a[0] = a_0.
SignRuns sign_runs(const std::vector<Rational>& a, int first = 1);

}  // namespace ddseries::spherical
