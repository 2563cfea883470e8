#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "ddseries/reversion/alpha.hpp"

namespace ddseries::connective {

struct Theorem1Report {
  int d = 0;
  double s = 0;  // 1 / (2d)
  double beta_hat = 0;
  std::string beta_source;
  std::vector<double> alphas;
  std::vector<double> remainders;  // R_M, M = 1 .. M_max
  double empirical_c1 = 0;         // max_M R_M^{1/M}
  bool finite = true;              // every R_M positive and finite
  bool within_cap = true;          // empirical_c1 <= kC1Cap
  bool passed() const { return finite && within_cap; }
};

inline constexpr double kC1Cap = 100.0;

// R_M = |beta_hat - sum_{n<M} alpha_n s^n| / (s^M M!) for M = 1 .. M_max.
// Needs alphas.order() >= M_max and s <= beta_hat <= 2s.
Theorem1Report theorem1_check(const reversion::AlphaSeries& alphas, double beta_hat, int d, int m_max,
                              const std::string& beta_source = "enumeration");

struct OrderingReport {
  int d = 0;
  std::vector<double> betas;        // beta_2, beta_4, beta_hat
  std::vector<double> uncertainty;  // per entry
  bool passed = false;
};

// beta_2 <= beta_4 <= beta_hat, each comparison allowed the combined uncertainty.
OrderingReport beta_ordering_check(int d, double beta_2, double beta_4, double beta_hat, double beta_hat_uncertainty,
                                   double beta_4_uncertainty = 0);

nlohmann::json to_json(const Theorem1Report& r);
nlohmann::json to_json(const OrderingReport& r);

}  // namespace ddseries::connective
