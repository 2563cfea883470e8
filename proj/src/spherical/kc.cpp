#include "ddseries/spherical/kc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ddseries/error.hpp"
#include "ddseries/exact/pade.hpp"
#include "ddseries/numeric/bessel.hpp"
#include "ddseries/numeric/quadrature.hpp"
#include "ddseries/resummation/borel.hpp"
#include "ddseries/spherical/series.hpp"

namespace ddseries::spherical {

namespace {

constexpr double kSplit = 60.0;  // direct quadrature on [0, kSplit], expansion beyond
constexpr int kTailTerms = 40;

void require_dimension(int d) {
  if (d < 3) throw PreconditionError("K_c(d) diverges for d <= 2 (integrand tail ~ x^{-d/2})");
}

// Coefficients of (sum_k p_k y^k)^d, y = 1/x.
std::vector<double> envelope_power(int d, int terms) {
  std::vector<double> base(static_cast<std::size_t>(terms));
  for (int k = 0; k < terms; ++k) base[static_cast<std::size_t>(k)] = numeric::bessel_asymptotic_coefficient(0, k);
  std::vector<double> out(static_cast<std::size_t>(terms), 0.0);
  out[0] = 1;
  for (int rep = 0; rep < d; ++rep) {
    std::vector<double> next(static_cast<std::size_t>(terms), 0.0);
    for (int i = 0; i < terms; ++i)
      for (int j = 0; i + j < terms; ++j)
        next[static_cast<std::size_t>(i + j)] += out[static_cast<std::size_t>(i)] * base[static_cast<std::size_t>(j)];
    out = std::move(next);
  }
  return out;
}

}  // namespace

KcValue kc_tail(int d, double x_from) {
  require_dimension(d);
  if (x_from < numeric::kBesselSwitch) throw PreconditionError("tail expansion needs x >= 20");
  const auto c = envelope_power(d, kTailTerms);
  const double half = 0.5 * d;
  const double scale = std::pow(2 * std::numbers::pi, -half);
  double sum = 0;
  double last = INFINITY;
  for (int k = 0; k < kTailTerms; ++k) {
    const double power = half + k - 1;
    const double term = scale * c[static_cast<std::size_t>(k)] * std::pow(x_from, -power) / power;
    if (std::abs(term) >= std::abs(last)) return {sum, std::abs(term)};
    sum += term;
    last = term;
  }
  return {sum, std::abs(last)};
}

KcValue kc_direct(int d, double tol) {
  require_dimension(d);
  auto integrand = [d](double x) { return std::exp(-d * numeric::g_spherical(x)); };
  const auto quad =
      numeric::integrate(integrand, numeric::geometric_breakpoints(1.0 / d, kSplit), 0.25 * tol, 0.25 * tol, 20000);
  const auto tail = kc_tail(d, kSplit);
  const double value = 0.5 * (quad.value + tail.value);
  const double error = 0.5 * (quad.error + tail.error);
  if (!quad.converged || error > tol * std::max(1.0, value)) {
    throw ConvergenceError("K_c(" + std::to_string(d) + ") direct quadrature reached " + std::to_string(value) +
                           " +- " + std::to_string(error) + ", above tolerance");
  }
  return {value, error};
}

double g_inverse(double t) {
  if (!(t >= 0)) throw PreconditionError("g^{-1} needs t >= 0");
  if (t == 0) return 0;
  // g(x) <= x, so g^{-1}(t) >= t.
  double lo = t;
  double hi = 2 + 4 * t;
  for (int grow = 0; numeric::g_spherical(hi) < t; ++grow) {
    if (grow > 200) throw ConvergenceError("no bracket for g^{-1}(" + std::to_string(t) + ")");
    lo = hi;
    hi *= 4;
  }
  for (int it = 0; it < 400 && hi - lo > 1e-13 * hi; ++it) {
    const double mid = hi > 4 * lo ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    if (numeric::g_spherical(mid) < t) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double x = 0.5 * (lo + hi);
  return x - (numeric::g_spherical(x) - t) / numeric::g_spherical_prime(x);
}

double g_inverse_prime(double t) { return 1 / numeric::g_spherical_prime(g_inverse(t)); }

KcValue kc_borel_inverse_function(int d, double tol) {
  require_dimension(d);
  // (g^{-1})'(t) ~ e^{2t} / pi, so the integrand decays like e^{-(d-2)t}.
  double cutoff = (std::log(1 / tol) + 5) / (d - 2);
  while (g_inverse(cutoff) < numeric::kBesselSwitch) cutoff *= 2;
  auto integrand = [d](double t) { return std::exp(-t * d) * g_inverse_prime(t); };
  const auto quad =
      numeric::integrate(integrand, numeric::geometric_breakpoints(1.0 / d, cutoff), 0.25 * tol, 0.25 * tol, 20000);
  // The remainder is the same integral in x beyond g^{-1}(cutoff).
  const auto tail = kc_tail(d, g_inverse(cutoff));
  const double value = 0.5 * (quad.value + tail.value);
  const double error = 0.5 * (quad.error + tail.error);
  if (!quad.converged) {
    throw ConvergenceError("K_c(" + std::to_string(d) + ") Borel quadrature reached " + std::to_string(value) +
                           " +- " + std::to_string(error));
  }
  return {value, error};
}

KcPadeValue kc_borel_pade(int d, int m, int n, double tol) {
  require_dimension(d);
  const auto a = a_coefficients(m + n + 1);
  std::vector<exact::Rational> derivative;
  for (int k = 1; k <= m + n + 1; ++k) derivative.push_back(a[static_cast<std::size_t>(k)] * k);
  const auto approx = exact::pade(derivative, m, n);
  const double s = 1.0 / d;
  const auto laplace = resummation::laplace_rational(approx, s, tol);
  // laplace = d int e^{-td} R dt
  return {{laplace.value / (2.0 * d), laplace.error / (2.0 * d)}, m, n, approx.used_n};
}

std::vector<double> kc_asymptotic(int d, const std::vector<exact::Rational>& a) {
  if (d < 1) throw PreconditionError("d must be >= 1");
  std::vector<double> out;
  exact::Rational sum = 0;
  exact::Rational weight = 1;  // n! / d^n
  for (std::size_t n = 1; n < a.size(); ++n) {
    weight *= exact::Rational(static_cast<long>(n)) / exact::Rational(d);
    sum += a[n] * weight;
    out.push_back(exact::to_double(sum / 2));
  }
  return out;
}

TruncationReport optimal_truncation(int d, const std::vector<exact::Rational>& a, double reference) {
  TruncationReport r;
  r.d = d;
  r.reference = reference;
  for (double p : kc_asymptotic(d, a)) r.errors.push_back(std::abs(p - reference) / std::abs(reference));
  if (r.errors.empty()) return r;
  const auto best = std::min_element(r.errors.begin(), r.errors.end());
  r.best_n = static_cast<int>(best - r.errors.begin()) + 1;
  r.best_error = *best;
  // U shape: the minimum is interior and the curve climbs back above its starting value.
  r.u_shaped = r.best_n > 1 && r.best_n < static_cast<int>(r.errors.size()) && r.errors.back() > r.errors.front();
  return r;
}

nlohmann::json to_json(const TruncationReport& r) {
  return {{"d", r.d},           {"reference", r.reference},   {"errors", r.errors},
          {"best_n", r.best_n}, {"best_error", r.best_error}, {"u_shaped", r.u_shaped}};
}

}  // namespace ddseries::spherical
