#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "ddseries/exact/rational.hpp"
#include "ddseries/reversion/ctable.hpp"

namespace ddseries::reversion {

// |alpha_n| <= 36^n C3^n n! for n <= n_max, given c_b <= C3^b b! for every
// row of the table.
struct AlphaBoundReport {
  bool passed = true;
  std::vector<double> ratios;  // |alpha_n| / (36^n C3^n n!), n = 1..n_max
  double max_ratio = 0.0;
  int max_ratio_n = 0;
  std::vector<int> violations;  // n with ratio > 1
};

// Throws PreconditionError naming the first b with c_b > C3^b b!.
AlphaBoundReport check_alpha_factorial_bound(const CTable& table, const Rational& c3, int n_max);

// phi = sum_{k>=0} k! x^k. For 1 <= n <= n_max and 0 <= k <= k_max checks
//   [x^k] phi^n <= k! prod_{j=1}^k (1 + (n-1)/j^2) <= 6^n k!
// exactly.
struct PowerBoundReport {
  bool passed = true;
  int cases = 0;
  // Largest [x^k]phi^n / product bound (1 means tight) and where it occurs.
  double max_ratio = 0.0;
  int max_ratio_n = 0;
  int max_ratio_k = 0;
  // (n, k) pairs where the first inequality is an equality.
  std::vector<std::pair<int, int>> equality_cases;
  std::vector<std::string> failures;
};

PowerBoundReport check_phi_power_bound(int k_max, int n_max);

// psi = sum_{k>=1} k! x^k. For 1 <= n <= k <= k_max (and n <= n_max) checks
//   [x^k] psi^n <= 6^k (k-n)!.
PowerBoundReport check_psi_power_bound(int k_max, int n_max);

// Coefficient helpers used by the checks, exposed for direct testing.
std::vector<exact::BigInt> phi_power(int k_max, int n);
std::vector<exact::BigInt> psi_power(int k_max, int n);

nlohmann::json to_json(const AlphaBoundReport& r);
nlohmann::json to_json(const PowerBoundReport& r);

}  // namespace ddseries::reversion
