#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace eur {

// Raised for malformed inputs: invalid states, out-of-range weights,
// dimension mismatches. The CLI maps this to exit code 1.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when no multistart run of the norm solver converged. Carries the
// best iterate seen so callers can inspect it. The CLI maps this to exit code 2.
class SolverFailure : public std::runtime_error {
 public:
  SolverFailure(const std::string& what, double best_value, std::vector<double> best_iterate)
      : std::runtime_error(what), best_value_(best_value), best_iterate_(std::move(best_iterate)) {}

  double best_value() const { return best_value_; }
  const std::vector<double>& best_iterate() const { return best_iterate_; }

 private:
  double best_value_;
  std::vector<double> best_iterate_;
};

// A broken internal consistency anchor, e.g. the numeric norm disagreeing
// with a proven closed form. Never expected in correct operation.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace eur
