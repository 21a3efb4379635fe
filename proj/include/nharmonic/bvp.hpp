#pragma once

// Radial boundary value problem L H = c, H(a) = alpha, H(b) = beta, solved
// in the form H(t) = lambda * H_kind(k t).

#include <optional>

#include "nharmonic/geometry.hpp"
#include "nharmonic/principal.hpp"

namespace nharm {

/// Radial stretching x -> H(|x|) x/|x| with H(t) = lambda * H_kind(k t) on
/// `domain`. A hammering composite additionally collapses `hammer_zone`
/// (sitting just inside `domain`) onto the sphere of radius `hammer_to`.
struct RadialMap {
  PrincipalKind kind = PrincipalKind::IdentityLike;
  double lambda = 1.0;
  double k = 1.0;
  Annulus domain{1.0, 2.0};
  std::optional<double> hammer_to;
  std::optional<Annulus> hammer_zone;

  bool hammered() const noexcept { return hammer_zone.has_value(); }

  /// Domain of the whole map, hammer zone included.
  Annulus full_domain() const;

  StrainSample sample(double t, Dimension n) const;

  /// Constant value of the characteristic operator on the smooth part.
  double characteristic_constant(Dimension n) const;
};

struct BvpProblem {
  double a = 1.0;
  double b = 2.0;
  double alpha = 1.0;
  double beta = 2.0;
};

struct BvpSolution {
  RadialMap map;
  double c = 0.0;
};

/// H_kind(k a) / H_kind(k b).
double q_ratio(PrincipalKind kind, double k, double a, double b, Dimension n);

BvpSolution solve_radial_bvp(const BvpProblem& p, Dimension n);

/// The radial n-harmonic taking source.inner -> target.inner and
/// source.outer -> target.outer.
BvpSolution fit_annuli(const Annulus& source, const Annulus& target, Dimension n);

}  // namespace nharm
