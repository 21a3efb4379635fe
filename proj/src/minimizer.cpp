#include "nharmonic/minimizer.hpp"

#include <cmath>
#include <fmt/format.h>

#include "nharmonic/errors.hpp"

namespace nharm {
namespace {

// The sharp-bound path stacks root finding under the integral.
constexpr double kBoundAgreement = 1e-6;

void compare_with_bound(MinimizerPlan& plan, double bound) {
  plan.lower_bound_energy = bound;
  const double rel = std::abs(bound - plan.energy.value) / std::abs(plan.energy.value);
  if (rel > kBoundAgreement) {
    plan.flags.push_back(fmt::format("lower-bound energy {:.17g} differs from the map energy by {:.3g} relative",
                                     bound, rel));
  }
}

}  // namespace

std::string_view to_string(PlanStatus s) {
  return s == PlanStatus::ProvenMinimal ? "proven_minimal" : "radial_unproven";
}

std::string_view to_string(MapShape s) {
  switch (s) {
    case MapShape::Conformal: return "conformal";
    case MapShape::Radial: return "radial";
    case MapShape::HammeringComposite: return "hammering_composite";
  }
  return "unknown";
}

MinimizerPlan minimal_energy(const Annulus& source, const Annulus& target, Dimension n,
                             const QuadratureOptions& opt) {
  MinimizerPlan plan{source, target, n, classify(source, target, n)};
  const Regime regime = plan.classification.regime;
  const double d = n.real();

  if (n.value() == 2) {
    PlanarMinimizer pm = planar_minimal_energy(source, target);
    plan.map = pm.map;
    plan.planar = pm.spec;
    plan.energy = pm.energy;
    plan.shape = regime == Regime::Conformal ? MapShape::Conformal
                 : pm.hammered               ? MapShape::HammeringComposite
                                             : MapShape::Radial;
    if (pm.hammered) plan.rho = pm.map.domain.inner();
  } else if (regime == Regime::Conformal) {
    plan.shape = MapShape::Conformal;
    plan.map.kind = PrincipalKind::IdentityLike;
    plan.map.lambda = target.inner();
    plan.map.k = 1.0 / source.inner();
    plan.map.domain = source;
    plan.energy = evaluate_energy(plan.map, n, Functional::ConformalE, kFormulaConformalVolume, opt);
  } else if (regime == Regime::ContractingBelow) {
    // Critical Nitsche profile r* H_+(t/rho) on [rho, R]; A(r, rho) is hammered onto |y| = r*.
    const double rho = source.outer() / h_plus_inverse_above_one(target.outer() / target.inner(), n);
    plan.shape = MapShape::HammeringComposite;
    plan.rho = rho;
    plan.map.kind = PrincipalKind::Plus;
    plan.map.lambda = target.inner();
    plan.map.k = 1.0 / rho;
    plan.map.domain = Annulus(rho, source.outer());
    plan.map.hammer_to = target.inner();
    plan.map.hammer_zone = Annulus(source.inner(), rho);
    plan.energy = radial_energy(plan.map, n, Functional::ConformalE, opt);
  } else {
    plan.shape = MapShape::Radial;
    plan.map = fit_annuli(source, target, n).map;
    plan.energy = radial_energy(plan.map, n, Functional::ConformalE, opt);
  }

  const double c = plan.map.characteristic_constant(n);
  switch (regime) {
    case Regime::ContractingWithin:
    case Regime::ContractingBelow:
      compare_with_bound(plan, contracting_bound_energy(c, source, target, n, opt));
      break;
    case Regime::ExpandingWithin: {
      compare_with_bound(plan, expanding_bound_energy(c, source, target, n, opt));
      const double an = alpha_n(n);
      const double eta_r = plan.map.sample(source.inner(), n).eta;
      if (std::isfinite(an) && eta_r > an * (1.0 + 1e-8)) {
        plan.flags.push_back(fmt::format(
            "elasticity at the inner radius {:.17g} exceeds alpha_n {:.17g} inside the upper bound",
            eta_r, an));
      }
      break;
    }
    case Regime::ExpandingAbove:
      if (n.value() < 4) {
        throw NumericalError("expanding-above regime reached in dimension below 4", d);
      }
      plan.status = PlanStatus::RadialUnproven;
      if (expanding_witness_hypotheses(source, target, n)) {
        plan.witness = nonradial_witness(source, target, n, Functional::ConformalE, opt);
      }
      break;
    case Regime::Conformal: break;
  }
  return plan;
}

}  // namespace nharm
