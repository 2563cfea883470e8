#include "ddseries/numeric/bessel.hpp"

#include <cmath>
#include <numbers>

#include "ddseries/error.hpp"

namespace ddseries::numeric {

namespace {

constexpr int kMaxTerms = 400;

void require_nonnegative(double x) {
  if (!(x >= 0)) throw PreconditionError("Bessel argument must be non-negative");
}

// sum_{k>=1} (x^2/4)^k / (k!)^2, i.e. I_0(x) - 1
double i0_minus_one_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1;
  double sum = 0;
  for (int k = 1; k < kMaxTerms; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

// I_1(x) = (x/2) sum_k (x^2/4)^k / (k! (k+1)!)
double i1_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1;
  double sum = 1;
  for (int k = 1; k < kMaxTerms; ++k) {
    term *= q / (static_cast<double>(k) * (k + 1));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return 0.5 * x * sum;
}

// Partial sum of sum_k p_k(nu) x^{-k}, stopped at the smallest term.
double asymptotic_sum(int nu, double x) {
  double sum = 0;
  double last = INFINITY;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double term = bessel_asymptotic_coefficient(nu, k) * std::pow(x, -k);
    if (std::abs(term) > std::abs(last)) break;
    sum += term;
    last = term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// sum_{k>=1} (p_k(0) - p_k(1)) x^{-k}. With r_k = p_k(1)/p_k(0) =
// prod_j ((2j-1)^2 - 4)/(2j-1)^2 < 0 the difference is p_k(0)(1 + |r_k|),
// so nothing cancels.
double asymptotic_difference(double x) {
  double sum = 0;
  double last = INFINITY;
  double r = 1;
  for (int k = 1; k < kMaxTerms; ++k) {
    const double o = 2.0 * k - 1;
    r *= (o * o - 4) / (o * o);
    const double term = bessel_asymptotic_coefficient(0, k) * (1 - r) * std::pow(x, -k);
    if (std::abs(term) > std::abs(last)) break;
    sum += term;
    last = term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

double bessel_asymptotic_coefficient(int nu, int k) {
  const double mu = 4.0 * nu * nu;
  double p = 1;
  for (int j = 1; j <= k; ++j) {
    const double o = 2.0 * j - 1;
    p *= -(mu - o * o) / (8.0 * j);
  }
  return p;
}

double i0_scaled_series(double x) { return std::exp(-x) * (1 + i0_minus_one_series(x)); }

double i0_scaled_asymptotic(double x) { return asymptotic_sum(0, x) / std::sqrt(2 * std::numbers::pi * x); }

double i0_scaled(double x) {
  require_nonnegative(x);
  return x < kBesselSwitch ? i0_scaled_series(x) : i0_scaled_asymptotic(x);
}

double i1_scaled(double x) {
  require_nonnegative(x);
  if (x < kBesselSwitch) return std::exp(-x) * i1_series(x);
  return asymptotic_sum(1, x) / std::sqrt(2 * std::numbers::pi * x);
}

double g_spherical(double x) {
  require_nonnegative(x);
  if (x < kBesselSwitch) return x - std::log1p(i0_minus_one_series(x));
  return 0.5 * std::log(2 * std::numbers::pi * x) - std::log(asymptotic_sum(0, x));
}

double g_spherical_prime(double x) {
  require_nonnegative(x);
  if (x < kBesselSwitch) {
    const double i0 = 1 + i0_minus_one_series(x);
    return (i0 - i1_series(x)) / i0;
  }
  return asymptotic_difference(x) / asymptotic_sum(0, x);
}

}  // namespace ddseries::numeric
