#pragma once

#include <stdexcept>
#include <string>

namespace ddseries {

// Input violates an operation's stated precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A series operation that needs a unit (or zero) coefficient did not get one.
class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A checked mathematical invariant failed. The CLI maps this to exit code 1.
class ValidationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Work limit hit before the requested result was complete. Exit code 3.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iterative numerics (quadrature, power iteration, root finding) gave up.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A rational approximant has a pole on the integration contour.
class PoleError : public std::runtime_error {
 public:
  PoleError(const std::string& what, double location)
      : std::runtime_error(what), location_(location) {}
  double location() const noexcept { return location_; }

 private:
  double location_;
};

}  // namespace ddseries
