#pragma once

#include <json.hpp>

#include <vector>

#include "ddseries/exact/rational.hpp"

namespace ddseries::spherical {

struct KcValue {
  double value = 0;
  double error = 0;  // estimated absolute error
};

// 1/2 int_0^infinity e^{-d g(x)} dx with g(x) = x - log I_0(x), d >= 3.
// Adaptive quadrature on [0, X] plus the tail integrated term by term from
// the large-x expansion of (e^{-x} I_0(x))^d.
KcValue kc_direct(int d, double tol = 1e-12);

// Tail int_X^infinity (e^{-x} I_0(x))^d dx for X >= 20, with the first
// omitted term as error.
KcValue kc_tail(int d, double x_from);

// Inverse of the monotone g: bracket expansion from [t, 2 + 4t], bisection to
// relative 1e-13, one Newton step.
double g_inverse(double t);
// (g^{-1})'(t) = 1 / g'(g^{-1}(t)).
double g_inverse_prime(double t);

// 1/2 int_0^infinity e^{-t d} (g^{-1})'(t) dt with g^{-1} evaluated by root finding.
KcValue kc_borel_inverse_function(int d, double tol = 1e-12);

struct KcPadeValue {
  KcValue result;
  int m = 0;
  int n = 0;
  int used_n = 0;
};
// Same integral with (g^{-1})' replaced by its [m/n] Pade approximant built
// from the exact coefficients a_1 .. a_{m+n+1}. Raises PoleError when the
// approximant has a pole on the positive axis.
KcPadeValue kc_borel_pade(int d, int m, int n, double tol = 1e-12);

// Partial sums 1/2 sum_{n <= N} a_n n! / d^n for N = 1 .. a.size() - 1, with
// a[0] = 0. Exact sums converted at the end.
std::vector<double> kc_asymptotic(int d, const std::vector<exact::Rational>& a);

struct TruncationReport {
  int d = 0;
  double reference = 0;
  std::vector<double> errors;  // |partial_N - reference| / reference, N = 1 ..
  int best_n = 0;
  double best_error = 0;
  bool u_shaped = false;  // decreases to best_n, then increases past it
};
TruncationReport optimal_truncation(int d, const std::vector<exact::Rational>& a, double reference);

nlohmann::json to_json(const TruncationReport& r);

}  // namespace ddseries::spherical
