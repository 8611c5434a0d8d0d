#pragma once

#include <stdexcept>
#include <string>

namespace nlkg {

/// Invalid configuration or mismatched inputs (wrong grid, bad key, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An iterative solver failed to reach its tolerance.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A solver collapsed onto the trivial (zero) solution.
struct DegenerateSolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A linear system or Gram matrix is too ill-conditioned to trust.
struct ConditioningError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Generic numerical failure (eigensolver breakdown, NaN, ...).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Time integration exceeded the blow-up guard.
struct BlowupError : std::runtime_error {
  BlowupError(const std::string& msg, double t)
      : std::runtime_error(msg), last_valid_time(t) {}
  double last_valid_time;
};

}  // namespace nlkg
