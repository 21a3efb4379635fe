#pragma once

namespace nharm {

/// Tolerances for the adaptive Gauss-Kronrod integrator used throughout.
struct QuadratureOptions {
  double rtol = 1e-9;
  double atol = 1e-10;
  unsigned max_depth = 22;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

}  // namespace nharm
