#include "ddseries/connective/mu.hpp"

#include <algorithm>
#include <cmath>

#include "ddseries/error.hpp"

namespace ddseries::connective {

namespace {

// Aitken delta-squared on (x0, x1, x2); a flat second difference returns x2.
double aitken(double x0, double x1, double x2) {
  const double d2 = x2 - 2 * x1 + x0;
  if (std::abs(d2) <= 1e-15 * std::max({std::abs(x0), std::abs(x1), std::abs(x2)})) return x2;
  return x2 - (x2 - x1) * (x2 - x1) / d2;
}

}  // namespace

double MuEstimate::best_upper_bound() const {
  return upper_bounds.empty() ? INFINITY : *std::min_element(upper_bounds.begin(), upper_bounds.end());
}

MuEstimate mu_estimates(const walks::WalkCensus& census) {
  const int length = census.max_length();
  if (length < 6) throw PreconditionError("mu estimate needs at least 6 counts, census has " + std::to_string(length));
  MuEstimate out;
  out.d = census.d;
  out.model = census.model.label();
  out.method = "parity-aware linear ratio extrapolation + Aitken";
  for (int n = 1; n <= length; ++n) out.upper_bounds.push_back(std::exp(exact::log_of(census.count(n)) / n));
  // ratio[n] for n = 2 .. L, stored at index n
  std::vector<double> ratio(static_cast<std::size_t>(length) + 1, 0.0);
  for (int n = 2; n <= length; ++n) {
    ratio[n] = exact::to_double(exact::Rational(census.count(n)) / exact::Rational(census.count(n - 1)));
    out.ratios.push_back(ratio[n]);
  }
  std::vector<double> extrapolated;
  for (int n = 4; n <= length; ++n) extrapolated.push_back((n * ratio[n] - (n - 2) * ratio[n - 2]) / 2);
  for (std::size_t i = 2; i < extrapolated.size(); ++i) {
    out.accelerated.push_back(aitken(extrapolated[i - 2], extrapolated[i - 1], extrapolated[i]));
  }
  const std::size_t k = out.accelerated.size();
  out.point_estimate = out.accelerated.back();
  double spread = 0;
  if (k >= 3) {
    const auto [lo, hi] = std::minmax({out.accelerated[k - 1], out.accelerated[k - 2], out.accelerated[k - 3]});
    spread = hi - lo;
  }
  out.uncertainty = std::max(spread, std::abs(out.point_estimate - extrapolated.back()));
  return out;
}

BetaEstimate beta_from_mu(const MuEstimate& mu) {
  return {1 / mu.point_estimate, mu.uncertainty / (mu.point_estimate * mu.point_estimate)};
}

nlohmann::json to_json(const MuEstimate& mu) {
  return {{"d", mu.d},
          {"model", mu.model},
          {"point_estimate", mu.point_estimate},
          {"uncertainty", mu.uncertainty},
          {"upper_bounds", mu.upper_bounds},
          {"best_upper_bound", mu.best_upper_bound()},
          {"ratios", mu.ratios},
          {"accelerated", mu.accelerated},
          {"method", mu.method}};
}

}  // namespace ddseries::connective
