#include "ddseries/resummation/borel.hpp"

#include <cmath>

#include "ddseries/error.hpp"
#include "ddseries/exact/series.hpp"
#include "ddseries/numeric/quadrature.hpp"

namespace ddseries::resummation {

namespace {

constexpr int kScanPoints = 4000;

std::vector<long double> to_long_double(const std::vector<Rational>& v) {
  std::vector<long double> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(static_cast<long double>(exact::to_double(q)));
  return out;
}

long double horner(const std::vector<long double>& c, long double x) {
  long double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

std::optional<double> find_positive_pole(const exact::PadeApproximant& r, double t_max) {
  const auto q = to_long_double(r.denominator);
  if (q.size() <= 1) return std::nullopt;
  const double t_min = t_max * 1e-9;
  long double prev_t = 0;
  long double prev_q = horner(q, 0);
  for (int i = 0; i <= kScanPoints; ++i) {
    const long double t = t_min * std::pow(static_cast<long double>(t_max / t_min), static_cast<long double>(i) / kScanPoints);
    const long double value = horner(q, t);
    if (value == 0) return static_cast<double>(t);
    if ((value < 0) != (prev_q < 0)) {
      long double lo = prev_t, hi = t, flo = prev_q;
      for (int it = 0; it < 200 && hi - lo > 1e-15L * hi; ++it) {
        const long double mid = 0.5L * (lo + hi);
        const long double fm = horner(q, mid);
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      return static_cast<double>(0.5L * (lo + hi));
    }
    prev_t = t;
    prev_q = value;
  }
  return std::nullopt;
}

LaplaceResult laplace_rational(const exact::PadeApproximant& r, double s, double tol) {
  if (!(s > 0)) throw PreconditionError("Laplace parameter s must be positive");
  if (!(tol > 0)) throw PreconditionError("tolerance must be positive");
  const auto p = to_long_double(r.numerator);
  const auto q = to_long_double(r.denominator);
  auto integrand = [&](double t) {
    return static_cast<double>(std::exp(-static_cast<long double>(t) / s) * horner(p, t) / horner(q, t) / s);
  };
  // Extend the cutoff until the integrand (times the e-folding length s) is negligible.
  double cutoff = s * (std::log(1 / tol) + 10);
  for (int grow = 0; grow < 200; ++grow) {
    if (std::abs(integrand(cutoff)) * s < 1e-3 * tol) break;
    cutoff += s * std::log(10.0);
  }
  if (const auto pole = find_positive_pole(r, cutoff)) {
    throw PoleError("approximant has a pole on the integration contour at t = " + std::to_string(*pole), *pole);
  }
  const auto quad =
      numeric::integrate(integrand, numeric::geometric_breakpoints(s, cutoff), 0.1 * tol, 0.1 * tol, 20000);
  if (!quad.converged) {
    throw ConvergenceError("Laplace quadrature did not reach tolerance; estimate " + std::to_string(quad.value) +
                           " +- " + std::to_string(quad.error));
  }
  const double tail = std::abs(integrand(cutoff)) * s;
  return {quad.value, quad.error + tail, cutoff, quad.evaluations};
}

BorelSumResult borel_sum(const CoefficientSource& src, double s, int pade_m, int pade_n, double tol) {
  if (!(s > 0)) throw PreconditionError("s must be positive");
  const int length = src.size();
  if (length < 1) throw PreconditionError("Borel sum needs at least one coefficient");
  const int fallback = (length - 1) / 2;
  if (pade_m < 0) pade_m = fallback;
  if (pade_n < 0) pade_n = fallback;
  if (pade_m + pade_n > length) {
    throw PreconditionError("Pade [" + std::to_string(pade_m) + "/" + std::to_string(pade_n) + "] needs " +
                            std::to_string(pade_m + pade_n) + " coefficients, source has " + std::to_string(length));
  }
  const auto borel = exact::borel_transform(exact::PowerSeries(src.series()));
  const auto approx = exact::pade(borel.coeffs(), pade_m, pade_n);
  const auto laplace = laplace_rational(approx, s, tol);
  BorelSumResult out;
  out.s = s;
  out.value = laplace.value;
  out.error_estimate = laplace.error;
  out.pade_m = pade_m;
  out.pade_n = pade_n;
  out.used_n = approx.used_n;
  out.tol = tol;
  out.cutoff = laplace.cutoff;
  return out;
}

std::vector<double> partial_sums(const CoefficientSource& src, double s) {
  const Rational exact_s(s);
  Rational power = 1;
  Rational sum = 0;
  std::vector<double> out;
  for (const auto& e : src.entries) {
    power *= exact_s;
    sum += e.value * power;
    out.push_back(exact::to_double(sum));
  }
  return out;
}

std::vector<double> borel_transform_float(const std::vector<double>& a) {
  std::vector<double> out;
  out.reserve(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) out.push_back(a[n] / std::tgamma(static_cast<double>(n) + 1));
  return out;
}

nlohmann::json to_json(const BorelSumResult& r) {
  return {{"s", r.s},
          {"value", r.value},
          {"error_estimate", r.error_estimate},
          {"pade_m", r.pade_m},
          {"pade_n", r.pade_n},
          {"pade_n_used", r.used_n},
          {"tol", r.tol},
          {"cutoff", r.cutoff}};
}

}  // namespace ddseries::resummation
