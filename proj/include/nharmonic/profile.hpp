#pragma once

// A strain profile is any radial stretching t -> H(t) on an annulus, given by
// a sampler that returns H, H' and the elasticity together. Energies and the
// free-Lagrangian checks all consume this one shape.

#include <functional>
#include <vector>

#include "nharmonic/bvp.hpp"
#include "nharmonic/geometry.hpp"
#include "nharmonic/principal.hpp"

namespace nharm {

class StrainProfile {
 public:
  using Sampler = std::function<StrainSample(double)>;

  StrainProfile(Annulus domain, Sampler sampler, std::vector<double> breakpoints = {});

  const Annulus& domain() const noexcept { return domain_; }
  StrainSample operator()(double t) const { return sampler_(t); }

  /// Interior points where the integrand may lose smoothness.
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }

  /// Endpoints and breakpoints in log t, ascending.
  std::vector<double> log_nodes() const;

 private:
  Annulus domain_;
  Sampler sampler_;
  std::vector<double> breakpoints_;
};

StrainProfile to_profile(const RadialMap& map, Dimension n);

/// h(x) = r* r^{-a} |x|^{a-1} x with a = Mod target / Mod source.
StrainProfile power_stretching(const Annulus& source, const Annulus& target);

/// Monotone piecewise-cubic (PCHIP) strain through the knots (t_i, H_i).
/// At least four knots, t strictly increasing.
StrainProfile monotone_cubic(std::vector<double> t, std::vector<double> H);

}  // namespace nharm
