#pragma once

// Energy-minimal deformation between two annuli, regime by regime.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nharmonic/bvp.hpp"
#include "nharmonic/energy.hpp"
#include "nharmonic/lagrangian.hpp"
#include "nharmonic/nitsche.hpp"

namespace nharm {

enum class PlanStatus { ProvenMinimal, RadialUnproven };
std::string_view to_string(PlanStatus s);

enum class MapShape { Conformal, Radial, HammeringComposite };
std::string_view to_string(MapShape s);

struct MinimizerPlan {
  Annulus source{1.0, 2.0};
  Annulus target{1.0, 2.0};
  Dimension n{2};
  PairClassification classification;
  MapShape shape = MapShape::Radial;
  RadialMap map;
  std::optional<double> rho;                 // junction radius of a hammering composite
  std::optional<PlanarNitscheSpec> planar;   // n = 2 only
  EnergyReport energy;
  std::optional<double> lower_bound_energy;  // independent sharp-bound evaluation
  PlanStatus status = PlanStatus::ProvenMinimal;
  std::optional<NonRadialWitness> witness;
  std::vector<std::string> flags;            // consistency findings, empty when all agree
};

MinimizerPlan minimal_energy(const Annulus& source, const Annulus& target, Dimension n,
                             const QuadratureOptions& opt = {});

}  // namespace nharm
