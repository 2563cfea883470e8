#pragma once

#include <json.hpp>

#include <optional>
#include <vector>

#include "ddseries/exact/pade.hpp"
#include "ddseries/resummation/source.hpp"

namespace ddseries::resummation {

struct LaplaceResult {
  double value = 0;
  double error = 0;   // quadrature estimate plus truncation of the tail
  double cutoff = 0;  // upper limit actually used
  int evaluations = 0;
};

// (1/s) int_0^infinity e^{-t/s} R(t) dt for a rational R. The denominator is
// scanned for sign changes on [0, cutoff]; any root found there raises
// PoleError with its location.
LaplaceResult laplace_rational(const exact::PadeApproximant& r, double s, double tol);

// Scans the denominator of r on [0, t_max] (geometric grid plus bisection).
// Returns the smallest root found, if any.
std::optional<double> find_positive_pole(const exact::PadeApproximant& r, double t_max);

struct BorelSumResult {
  double s = 0;
  double value = 0;
  double error_estimate = 0;
  int pade_m = 0;
  int pade_n = 0;
  int used_n = 0;  // denominator degree after any reduction
  double tol = 0;
  double cutoff = 0;
};

// Borel transform B(t) = sum alpha_n t^n / n! (exact), Pade [m/n] of B, then
// the Laplace integral. pade_m / pade_n < 0 select floor((L-1)/2).
BorelSumResult borel_sum(const CoefficientSource& src, double s, int pade_m = -1, int pade_n = -1,
                         double tol = 1e-12);

// Running sums of alpha_n s^n, summed exactly then converted.
std::vector<double> partial_sums(const CoefficientSource& src, double s);

// Float path: a_n / n!.
std::vector<double> borel_transform_float(const std::vector<double>& a);

nlohmann::json to_json(const BorelSumResult& r);

}  // namespace ddseries::resummation
