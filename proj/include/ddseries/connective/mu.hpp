#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "ddseries/walks/census.hpp"

namespace ddseries::connective {

struct MuEstimate {
  int d = 0;
  std::string model;
  double point_estimate = 0;
  double uncertainty = 0;
  std::vector<double> upper_bounds;  // c_n^{1/n}, n = 1 .. L; rigorous by submultiplicativity
  std::vector<double> ratios;        // c_n / c_{n-1}, n = 2 .. L
  std::vector<double> accelerated;   // Aitken values of the extrapolated ratios
  std::string method;

  double best_upper_bound() const;
};

// Ratio method. r_n = c_n / c_{n-1} is first extrapolated linearly in 1/n
// across same-parity neighbours, E_n = (n r_n - (n-2) r_{n-2}) / 2, which
// removes the leading 1/n correction and the even/odd oscillation; one
// Aitken delta-squared pass over E_n gives the point estimate. The
// uncertainty is the larger of the spread of the last three Aitken values
// and the size of the last Aitken correction. Needs at least 6 counts.
MuEstimate mu_estimates(const walks::WalkCensus& census);

struct BetaEstimate {
  double value = 0;        // 1 / mu
  double uncertainty = 0;  // propagated from the mu uncertainty
};
BetaEstimate beta_from_mu(const MuEstimate& mu);

nlohmann::json to_json(const MuEstimate& mu);

}  // namespace ddseries::connective
