#pragma once

// Dimensional constants and the lower/upper Nitsche functions that split
// pairs of annuli into regimes.

#include <optional>
#include <string_view>

#include "nharmonic/geometry.hpp"

namespace nharm {

struct NitscheConstants {
  double alpha_n = 0.0;            // +inf for n = 2, 3
  double gamma_n = 1.0;            // Gamma_-(1/alpha_n); 1 for n = 2, 3
  std::optional<double> delta_n;   // n >= 4 only
};

/// Memoized per dimension; safe to call from several threads.
const NitscheConstants& nitsche_constants(Dimension n);

double alpha_n(Dimension n);
double gamma_n(Dimension n);
/// Throws DomainError for n < 4.
double delta_n(Dimension n);

/// Modulus of the thinnest target reachable without hammering.
Modulus lower_nitsche(const Modulus& m, Dimension n);
/// Modulus of the fattest target with a proven radial minimizer; +inf for n = 2, 3.
Modulus upper_nitsche(const Modulus& m, Dimension n);

enum class Regime {
  Conformal,
  ContractingWithin,
  ContractingBelow,
  ExpandingWithin,
  ExpandingAbove,
};

std::string_view to_string(Regime r);

struct PairClassification {
  Regime regime = Regime::Conformal;
  Modulus mod_source;
  Modulus mod_target;
  double alpha_ratio = 1.0;  // Mod target / Mod source
  Modulus lower_bound;
  Modulus upper_bound;
};

PairClassification classify(const Annulus& source, const Annulus& target, Dimension n);

}  // namespace nharm
