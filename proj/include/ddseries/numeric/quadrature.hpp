#pragma once

#include <functional>
#include <vector>

namespace ddseries::numeric {

struct QuadResult {
  double value = 0;
  double error = 0;  // estimated absolute error
  int evaluations = 0;
  bool converged = false;
};

// Globally adaptive Gauss-Kronrod (7/15) on [a, b]; the panel with the
// largest error estimate is bisected until the total estimate is below
// max(abs_tol, rel_tol * |value|) or max_panels is reached.
QuadResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol, double rel_tol,
                     int max_panels = 4000);

// Same, starting from the panels between consecutive breakpoints (ascending).
// Use breakpoints to resolve features narrower than the whole interval.
QuadResult integrate(const std::function<double(double)>& f, const std::vector<double>& breakpoints, double abs_tol,
                     double rel_tol, int max_panels = 4000);

// 0, scale, 4 scale, 16 scale, ... capped at upper (which is included).
std::vector<double> geometric_breakpoints(double scale, double upper);

}  // namespace ddseries::numeric
