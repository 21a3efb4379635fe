#pragma once

// Energies of radial stretchings, the sharp lower-bound machinery behind
// them, and the planar closed forms.

#include <optional>
#include <string>
#include <string_view>

#include "nharmonic/bvp.hpp"
#include "nharmonic/geometry.hpp"
#include "nharmonic/nitsche.hpp"
#include "nharmonic/profile.hpp"
#include "nharmonic/quadrature.hpp"

namespace nharm {

enum class Functional {
  ConformalE,     // integral of ||Dh||^n
  WeightedF,      // integral of ||Dh||^n / |h|^n
  OperatorNormF,  // integral of |Dh|^n / |h|^n with the operator norm
};

std::string_view to_string(Functional f);
Functional parse_functional(std::string_view text);

struct EnergyReport {
  double value = 0.0;
  Functional functional = Functional::ConformalE;
  std::string formula_id;
  double quad_error = 0.0;
  Modulus mod_source;
  Modulus mod_target;
};

/// Quadrature in s = log t over the whole profile, breakpoints honoured.
EnergyReport profile_energy(const StrainProfile& profile, Dimension n, Functional f,
                            const QuadratureOptions& opt = {});

/// Quadrature over the smooth part plus the exact hammer-zone term.
EnergyReport radial_energy(const RadialMap& map, Dimension n, Functional f,
                           const QuadratureOptions& opt = {});

/// Formula identifiers understood by `evaluate_energy`.
inline constexpr std::string_view kFormulaQuadrature = "quadrature";
inline constexpr std::string_view kFormulaConformalVolume = "conformal_volume";
inline constexpr std::string_view kFormulaPlanar = "planar_nitsche";
inline constexpr std::string_view kHammerPrefix = "hammering+";

/// Re-evaluates the energy of `map` along a named path. A "hammering+"
/// prefix adds the hammer-zone term to the smooth part.
EnergyReport evaluate_energy(const RadialMap& map, Dimension n, Functional f,
                             std::string_view formula_id, const QuadratureOptions& opt = {});

/// The cheapest exact path available for the conformal energy of `map`.
std::string preferred_formula(const RadialMap& map, Dimension n);

enum class CoefficientBranch { Expanding, Contracting };

struct CoefficientPair {
  double a = 0.0;
  double b = 0.0;
  double alpha = 1.0;
  CoefficientBranch branch = CoefficientBranch::Expanding;
};

CoefficientPair coefficient_pair(double alpha, Dimension n, CoefficientBranch branch);

/// [X^2+(n-1)Y^2]^{n/2} minus the lower bound a X^n + b X Y^{n-1}
/// (Expanding) or a Y^n + b X Y^{n-1} (Contracting).
double coefficient_gap(const CoefficientPair& p, double X, double Y, Dimension n);

/// Elasticity along the target radius tau for the sharp lower bounds.
/// Contracting: eta in [0,1] with (1+eta^2/(n-1))^{(n-2)/2}(1-eta^2) = c/tau^n.
/// Expanding: eta > 1 with (n-1+eta^2)^{(n-2)/2}(eta^2-1) = q/tau^n.
double eta_of_tau(double tau, double c_or_q, Dimension n, CoefficientBranch branch);

/// Lower-bound energy assembled from the characteristic constant of a radial
/// minimizer on source -> target (the Hölder + free-Lagrangian path).
double contracting_bound_energy(double c, const Annulus& source, const Annulus& target,
                                Dimension n, const QuadratureOptions& opt = {});
double expanding_bound_energy(double c, const Annulus& source, const Annulus& target,
                              Dimension n, const QuadratureOptions& opt = {});

/// Parameters of the planar Nitsche map h(z) = (z + omega / conj z) / 2 on the
/// source annulus rescaled by `rescale`.
struct PlanarNitscheSpec {
  double omega = 0.0;
  double rescale = 1.0;
};

struct PlanarMinimizer {
  PlanarNitscheSpec spec;
  RadialMap map;
  EnergyReport energy;
  bool hammered = false;
};

PlanarMinimizer planar_minimal_energy(const Annulus& source, const Annulus& target);

EnergyReport operator_norm_lower_bound(const Annulus& source, const Annulus& target, Dimension n);

enum class FMinimality { ProvenMinimal, NotPowerStretching, Indeterminate };
std::string_view to_string(FMinimality s);

FMinimality f_minimality_status(const Annulus& source, const Annulus& target, Dimension n);

struct DistortionCheck {
  double inner_distortion_e = 0.0;  // n^{n/2} * integral of K_I(y, f) dy
  double energy_e = 0.0;            // integral of ||Dh||^n dx
  double inner_distortion_f = 0.0;  // same with weight |y|^{-n}
  double energy_f = 0.0;            // integral of ||Dh||^n / |h|^n dx
  double residual_e = 0.0;
  double residual_f = 0.0;
};

/// Both distortion identities for the inverse of an increasing radial
/// homeomorphism. The inverse-side integrals run over the target radius with
/// the inverse strain found by root finding, independently of the energies.
DistortionCheck distortion_integral_check(const StrainProfile& profile, Dimension n,
                                          const QuadratureOptions& opt = {});
DistortionCheck distortion_integral_check(const RadialMap& map, Dimension n,
                                          const QuadratureOptions& opt = {});

struct Dilatations {
  double outer = 1.0;  // K_O
  double inner = 1.0;  // K_I
};

/// Dilatations of the power stretching |x|^{alpha-1} x.
Dilatations power_stretching_dilatations(double alpha, Dimension n);

struct QcCheck {
  double ratio_power = 1.0;   // (Mod target / Mod source)^{n-1}
  double lower_margin = 0.0;  // ratio_power - 1/K_I
  double upper_margin = 0.0;  // K_O - ratio_power
  bool lower_holds = true;
  bool upper_holds = true;
};

QcCheck qc_bounds(const Annulus& source, const Annulus& target, Dimension n, double k_outer,
                  double k_inner);

}  // namespace nharm
