#include "ddseries/spherical/series.hpp"

#include "ddseries/error.hpp"

namespace ddseries::spherical {

PowerSeries i0_series(int order) {
  if (order < 0) throw PreconditionError("order must be non-negative");
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  Rational term = 1;
  for (int k = 0; 2 * k <= order; ++k) {
    if (k > 0) term /= Rational(4L * k * k);
    c[static_cast<std::size_t>(2 * k)] = term;
  }
  return PowerSeries(std::move(c));
}

PowerSeries g_series(int order) {
  if (order < 2) throw PreconditionError("g_series needs order >= 2");
  return PowerSeries::variable(order) - exact::logarithm(i0_series(order));
}

std::vector<Rational> a_coefficients(int order) {
  const auto inv = exact::revert(g_series(order));
  return {inv.coeffs().begin(), inv.coeffs().end()};
}

SphericalSeries spherical_series(int order) {
  auto g = g_series(order);
  auto inv = exact::revert(g);
  return {std::move(g), std::move(inv), order};
}

std::vector<int> SignRuns::lengths() const {
  std::vector<int> out;
  for (const auto& run : runs) out.push_back(run.second);
  return out;
}

SignRuns sign_runs(const std::vector<Rational>& a, int first) {
  SignRuns out;
  for (std::size_t n = static_cast<std::size_t>(first); n < a.size(); ++n) {
    const int sign = sgn(a[n]);
    if (sign == 0) {
      out.zero_at = static_cast<int>(n);
      break;
    }
    ++out.examined;
    if (!out.runs.empty() && out.runs.back().first == sign) {
      ++out.runs.back().second;
    } else {
      out.runs.emplace_back(sign, 1);
    }
  }
  return out;
}

}  // namespace ddseries::spherical
