#pragma once

namespace ddseries::numeric {

// Modified Bessel functions of the first kind, exponentially scaled:
// e^{-x} I_0(x) and e^{-x} I_1(x) for x >= 0. Power series below
// kBesselSwitch, large-argument asymptotic series at and above it.
inline constexpr double kBesselSwitch = 20.0;

double i0_scaled(double x);
double i1_scaled(double x);

// g(x) = x - log I_0(x), accurate for small x (no cancellation in log I_0).
double g_spherical(double x);
// g'(x) = 1 - I_1(x)/I_0(x), accurate for all x >= 0 including x -> infinity.
double g_spherical_prime(double x);

// Coefficients p_k of the asymptotic series e^{-x} I_nu(x) sqrt(2 pi x) ~ sum_k p_k x^{-k}, nu in {0, 1}.
double bessel_asymptotic_coefficient(int nu, int k);

// Direct series versions, exposed for the crossover check.
double i0_scaled_series(double x);
double i0_scaled_asymptotic(double x);

}  // namespace ddseries::numeric
