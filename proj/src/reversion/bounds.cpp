#include "ddseries/reversion/bounds.hpp"

#include "ddseries/error.hpp"
#include "ddseries/reversion/alpha.hpp"

namespace ddseries::reversion {

using exact::BigInt;

namespace {

constexpr int kExhaustiveLimit = 14;

std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b, int k_max) {
  std::vector<BigInt> out(static_cast<std::size_t>(k_max) + 1, BigInt(0));
  for (int i = 0; i <= k_max; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= k_max; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<BigInt> factorial_series(int k_max, int first) {
  std::vector<BigInt> out(static_cast<std::size_t>(k_max) + 1, BigInt(0));
  for (int k = first; k <= k_max; ++k) out[k] = exact::factorial(static_cast<unsigned long>(k));
  return out;
}

std::vector<BigInt> series_power(const std::vector<BigInt>& base, int k_max, int n) {
  std::vector<BigInt> out(static_cast<std::size_t>(k_max) + 1, BigInt(0));
  out[0] = 1;
  for (int i = 0; i < n; ++i) out = convolve(out, base, k_max);
  return out;
}

void require_exhaustive_range(int k_max, int n_max) {
  if (k_max < 0 || n_max < 1 || k_max > kExhaustiveLimit || n_max > kExhaustiveLimit) {
    throw PreconditionError("exhaustive bound checks need 0 <= k_max <= 14 and 1 <= n_max <= 14");
  }
}

void track(PowerBoundReport& r, const Rational& ratio, int n, int k) {
  const double v = exact::to_double(ratio);
  if (v > r.max_ratio) {
    r.max_ratio = v;
    r.max_ratio_n = n;
    r.max_ratio_k = k;
  }
}

}  // namespace

std::vector<BigInt> phi_power(int k_max, int n) { return series_power(factorial_series(k_max, 0), k_max, n); }

std::vector<BigInt> psi_power(int k_max, int n) { return series_power(factorial_series(k_max, 1), k_max, n); }

AlphaBoundReport check_alpha_factorial_bound(const CTable& table, const Rational& c3, int n_max) {
  if (sgn(c3) <= 0) throw PreconditionError("C3 must be positive");
  for (int b = 1; b <= table.max_b(); ++b) {
    const Rational limit = exact::pow(c3, static_cast<unsigned long>(b)) * exact::factorial(static_cast<unsigned long>(b));
    if (table.row_abs_sum(b) > limit) {
      throw PreconditionError("row b = " + std::to_string(b) + " violates c_b <= C3^b b!: c_b = " +
                              exact::to_string(table.row_abs_sum(b)) + " > " + exact::to_string(limit));
    }
  }
  const auto alpha = alpha_via_lemma(table, n_max);
  AlphaBoundReport report;
  for (int n = 1; n <= n_max; ++n) {
    const Rational bound = exact::pow(Rational(36) * c3, static_cast<unsigned long>(n)) *
                           exact::factorial(static_cast<unsigned long>(n));
    const Rational ratio = exact::abs(alpha(n)) / bound;
    const double r = exact::to_double(ratio);
    report.ratios.push_back(r);
    if (r > report.max_ratio) {
      report.max_ratio = r;
      report.max_ratio_n = n;
    }
    if (ratio > 1) {
      report.passed = false;
      report.violations.push_back(n);
    }
  }
  return report;
}

PowerBoundReport check_phi_power_bound(int k_max, int n_max) {
  require_exhaustive_range(k_max, n_max);
  PowerBoundReport report;
  const auto phi = factorial_series(k_max, 0);
  std::vector<BigInt> power(static_cast<std::size_t>(k_max) + 1, BigInt(0));
  power[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    power = convolve(power, phi, k_max);
    const BigInt six_n = exact::pow(BigInt(6), static_cast<unsigned long>(n));
    Rational product = 1;  // prod_{j<=k} (1 + (n-1)/j^2)
    for (int k = 0; k <= k_max; ++k) {
      if (k > 0) product *= 1 + exact::make_rational(n - 1, static_cast<long>(k) * k);
      const BigInt k_fact = exact::factorial(static_cast<unsigned long>(k));
      const Rational product_bound = product * k_fact;
      ++report.cases;
      const Rational coefficient(power[k]);
      if (coefficient > product_bound) {
        report.passed = false;
        report.failures.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": coefficient " +
                                  power[k].get_str() + " exceeds product bound " + exact::to_string(product_bound));
      }
      if (coefficient == product_bound) report.equality_cases.emplace_back(n, k);
      if (product_bound > Rational(six_n * k_fact)) {
        report.passed = false;
        report.failures.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                  ": product bound exceeds 6^n k!");
      }
      track(report, coefficient / product_bound, n, k);
    }
  }
  return report;
}

PowerBoundReport check_psi_power_bound(int k_max, int n_max) {
  require_exhaustive_range(k_max, n_max);
  PowerBoundReport report;
  const auto psi = factorial_series(k_max, 1);
  std::vector<BigInt> power(static_cast<std::size_t>(k_max) + 1, BigInt(0));
  power[0] = 1;
  for (int n = 1; n <= std::min(n_max, k_max); ++n) {
    power = convolve(power, psi, k_max);
    for (int k = n; k <= k_max; ++k) {
      const BigInt bound = exact::pow(BigInt(6), static_cast<unsigned long>(k)) *
                           exact::factorial(static_cast<unsigned long>(k - n));
      ++report.cases;
      if (power[k] > bound) {
        report.passed = false;
        report.failures.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                                  power[k].get_str() + " > " + bound.get_str());
      }
      if (power[k] == bound) report.equality_cases.emplace_back(n, k);
      Rational ratio(power[k], bound);
      ratio.canonicalize();
      track(report, ratio, n, k);
    }
  }
  return report;
}

nlohmann::json to_json(const AlphaBoundReport& r) {
  return {{"passed", r.passed},
          {"ratios", r.ratios},
          {"max_ratio", r.max_ratio},
          {"max_ratio_n", r.max_ratio_n},
          {"violations", r.violations}};
}

nlohmann::json to_json(const PowerBoundReport& r) {
  auto eq = nlohmann::json::array();
  for (const auto& [n, k] : r.equality_cases) eq.push_back({{"n", n}, {"k", k}});
  return {{"passed", r.passed},     {"cases", r.cases},   {"max_ratio", r.max_ratio},
          {"max_ratio_n", r.max_ratio_n}, {"max_ratio_k", r.max_ratio_k}, {"equality_cases", eq},
          {"failures", r.failures}};
}

}  // namespace ddseries::reversion
