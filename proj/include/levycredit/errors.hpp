#pragma once

#include <stdexcept>
#include <string>

namespace levycredit {

// Invalid model or configuration parameters; rejected at construction so
// NaNs never reach the quadrature or the samplers.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Adaptive quadrature could not meet the requested tolerance within its
// interval budget. Carries the error estimate that was achieved.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

// A Path whose stored running minimum (or time grid) is inconsistent with
// its values.
class PathIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Monte Carlo estimate that a downstream transform cannot accept
// (e.g. a non-positive survival probability fed into a logarithm).
class McFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace levycredit
