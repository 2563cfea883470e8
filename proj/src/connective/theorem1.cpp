#include "ddseries/connective/theorem1.hpp"

#include <cmath>

#include "ddseries/error.hpp"

namespace ddseries::connective {

Theorem1Report theorem1_check(const reversion::AlphaSeries& alphas, double beta_hat, int d, int m_max,
                              const std::string& beta_source) {
  if (d < 1) throw PreconditionError("dimension d must be >= 1");
  if (m_max < 1) throw PreconditionError("M_max must be >= 1");
  if (alphas.order() < m_max) {
    throw PreconditionError("need alpha_1 .. alpha_" + std::to_string(m_max) + ", got " +
                            std::to_string(alphas.order()));
  }
  const double s = 1.0 / (2 * d);
  if (!(beta_hat >= s && beta_hat <= 2 * s)) {
    throw PreconditionError("beta_hat = " + std::to_string(beta_hat) + " outside [s, 2s] = [" + std::to_string(s) +
                            ", " + std::to_string(2 * s) + "]");
  }
  Theorem1Report r;
  r.d = d;
  r.s = s;
  r.beta_hat = beta_hat;
  r.beta_source = beta_source;
  for (int n = 1; n <= alphas.order(); ++n) r.alphas.push_back(exact::to_double(alphas(n)));
  // The partial sum is formed exactly in s, then subtracted in long double.
  const exact::Rational s_exact(1, 2 * d);
  exact::Rational partial = 0;
  exact::Rational power = 1;
  long double log_scale = 0;  // log(s^M M!)
  for (int m = 1; m <= m_max; ++m) {
    if (m > 1) {
      power *= s_exact;
      partial += alphas(m - 1) * power;
    }
    log_scale += std::log(static_cast<long double>(s)) + std::log(static_cast<long double>(m));
    const long double diff = std::abs(static_cast<long double>(beta_hat) - exact::to_double(partial));
    const double remainder = static_cast<double>(diff / std::exp(log_scale));
    r.remainders.push_back(remainder);
    if (!(remainder > 0) || !std::isfinite(remainder)) {
      r.finite = false;
      continue;
    }
    r.empirical_c1 = std::max(r.empirical_c1, std::pow(remainder, 1.0 / m));
  }
  r.within_cap = r.empirical_c1 <= kC1Cap;
  return r;
}

OrderingReport beta_ordering_check(int d, double beta_2, double beta_4, double beta_hat, double beta_hat_uncertainty,
                                   double beta_4_uncertainty) {
  OrderingReport r;
  r.d = d;
  r.betas = {beta_2, beta_4, beta_hat};
  r.uncertainty = {0, beta_4_uncertainty, beta_hat_uncertainty};
  r.passed = beta_2 <= beta_4 + beta_4_uncertainty && beta_4 <= beta_hat + beta_hat_uncertainty + beta_4_uncertainty;
  return r;
}

nlohmann::json to_json(const Theorem1Report& r) {
  return {{"d", r.d},
          {"s", r.s},
          {"beta_hat", r.beta_hat},
          {"beta_source", r.beta_source},
          {"alphas", r.alphas},
          {"remainders", r.remainders},
          {"empirical_c1", r.empirical_c1},
          {"c1_cap", kC1Cap},
          {"finite", r.finite},
          {"within_cap", r.within_cap},
          {"passed", r.passed()}};
}

nlohmann::json to_json(const OrderingReport& r) {
  return {{"d", r.d}, {"betas", r.betas}, {"uncertainty", r.uncertainty}, {"passed", r.passed}};
}

}  // namespace ddseries::connective
