#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace nharm {

/// Input outside the mathematical domain of an operation (bad radii,
/// |s| >= 1, dimension too small, unmet theorem hypotheses).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A root finder or quadrature failed to reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double residual)
      : std::runtime_error(what + " (residual " + shortest(residual) + ")"), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  static std::string shortest(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
  }

  double residual_;
};

}  // namespace nharm
