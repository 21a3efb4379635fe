#pragma once

// Free-Lagrangian identities for radial maps, the spherical homothety, and
// the non-radial competitors that beat every radial map when n >= 4.

#include <functional>
#include <vector>

#include "nharmonic/bvp.hpp"
#include "nharmonic/energy.hpp"
#include "nharmonic/geometry.hpp"
#include "nharmonic/profile.hpp"
#include "nharmonic/quadrature.hpp"

namespace nharm {

/// Each entry compares a quadrature of the pulled-back form with its
/// topological value.
struct LagrangianTriple {
  double jacobian = 0.0;         // integral of J(x,h) vs |A*|
  double target_modulus = 0.0;   // integral of |h_N| / (|h| |x|^{n-1}) vs Mod A*
  double source_modulus = 0.0;   // integral of |h_T|^{n-1} / (|h|^{n-1} |x|) vs Mod A
};

struct FreeLagrangianReport {
  LagrangianTriple lhs;
  LagrangianTriple rhs;
  LagrangianTriple residual;  // |lhs - rhs|
};

/// Throws DomainError unless the profile is an increasing radial
/// homeomorphism of source onto target.
FreeLagrangianReport verify_free_lagrangians(const StrainProfile& profile, const Annulus& source,
                                             const Annulus& target, Dimension n,
                                             const QuadratureOptions& opt = {});
FreeLagrangianReport verify_free_lagrangians(const RadialMap& map, const Annulus& source,
                                             const Annulus& target, Dimension n,
                                             const QuadratureOptions& opt = {});

/// LHS - RHS of the three free-Lagrangian lower bounds; all >= 0, and 0 for
/// radial maps.
LagrangianTriple free_lagrangian_estimates(const StrainProfile& profile, const Annulus& source,
                                           const Annulus& target, Dimension n,
                                           const QuadratureOptions& opt = {});

struct SphericalHomothety {
  double lambda = 1.0;
};

struct MeridianSample {
  double theta = 0.0;
  double phi = 0.0;
  double phi_dot = 1.0;
  double dbar_norm = 1.0;
};

/// Meridian profile of the homothety: tan(phi/2) = lambda tan(theta/2).
MeridianSample homothety_profile(double lambda, double theta);
inline MeridianSample homothety_profile(SphericalHomothety h, double theta) {
  return homothety_profile(h.lambda, theta);
}

/// Mean of the tangential Jacobian over the sphere; identically 1.
double homothety_jacobian_mean(double lambda, Dimension n, const QuadratureOptions& opt = {});

/// Mean over the sphere of [alpha^2 + (n-1) |D Phi^lambda|^2]^{n/2}.
double sphere_energy_T(double alpha, double lambda, Dimension n, const QuadratureOptions& opt = {});

struct WitnessCandidate {
  double lambda = 1.0;
  double energy = 0.0;
  double gap = 0.0;
  bool admissible = false;  // inside the range where strictness is proven
};

struct NonRadialWitness {
  Functional functional = Functional::WeightedF;
  double lambda = 1.0;
  double radial_energy = 0.0;   // infimum over radial maps
  double witness_energy = 0.0;  // energy of h_lambda = radial profile x Phi^lambda
  double gap = 0.0;             // radial_energy - witness_energy
  bool conclusive = false;      // some candidate gave a strictly positive gap
  std::vector<WitnessCandidate> scan;
};

inline constexpr double kWitnessLambdas[] = {0.8, 0.9, 0.95, 1.05, 1.1, 1.2};

/// True when 1 < R/r < delta_n and R*/r* > H_-(delta_n) / H_-(delta_n r/R).
bool expanding_witness_hypotheses(const Annulus& source, const Annulus& target, Dimension n);

/// F: needs n >= 4 and Mod A*/Mod A > sqrt((n-1)/(n-3)).
/// E: needs n >= 4 and the hypotheses above.
NonRadialWitness nonradial_witness(const Annulus& source, const Annulus& target, Dimension n,
                                   Functional functional, const QuadratureOptions& opt = {});

/// Finitely supported random variable with values >= 0.
struct DiscreteVariable {
  std::vector<double> values;
  std::vector<double> masses;
};

struct TwoPointVariable {
  double high_value = 1.0;
  double mass_high = 1.0;  // the remaining mass sits at 0

  DiscreteVariable as_discrete() const;
};

/// The extremal two-point variable for alpha > alpha_n.
TwoPointVariable optimal_two_point(double alpha, Dimension n);

/// E[X] = sum m_i [alpha^2 + (n-1) x_i^{2/(n-1)}]^{n/2}; needs mean >= 1.
double random_variable_energy(double alpha, Dimension n, const DiscreteVariable& X);
double random_variable_energy(double alpha, Dimension n, const TwoPointVariable& X);

/// alpha^n + b alpha with b = n (alpha_n^2+n-1)^{(n-2)/2} / alpha_n.
double two_point_energy(double alpha, Dimension n);

}  // namespace nharm
