#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace sbq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold (bad radius, chamber violation, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The spectral model cannot perform the requested evaluation.
class CapabilityError : public Error {
 public:
  CapabilityError(std::string capability, const std::string& model)
      : Error("model '" + model + "' lacks capability: " + capability),
        capability_(std::move(capability)) {}

  const std::string& capability() const noexcept { return capability_; }

 private:
  std::string capability_;
};

/// Numerical procedure did not reach its tolerance. Carries the achieved estimate.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double error_estimate)
      : Error(what + " (error estimate " + format(error_estimate) + ")"),
        error_estimate_(error_estimate) {}

  double error_estimate() const noexcept { return error_estimate_; }

 private:
  static std::string format(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
  }

  double error_estimate_;
};

}  // namespace sbq
