#pragma once

// The four principal radial n-harmonics and the special functions behind
// them. Every radial n-harmonic strain is lambda * H(k t) for one of these.

#include <string_view>

#include "nharmonic/geometry.hpp"

namespace nharm {

enum class PrincipalKind {
  IdentityLike,   // H(t) = t
  InversionLike,  // H(t) = 1/t
  Plus,           // conformal contraction, L H = 1, H(1) = 1
  Minus,          // conformal expansion,   L H = -1, H(1) = 0
};

std::string_view to_string(PrincipalKind kind);
PrincipalKind parse_principal_kind(std::string_view text);

/// One point of a radial strain t -> H(t).
///
/// `defect` is 1 - eta^2, carried separately because for contracting strains
/// near the asymptote eta^2 rounds to 1 and the characteristic operator
/// would lose every digit if the defect were recomputed from eta.
struct StrainSample {
  double t = 1.0;
  double H = 0.0;
  double Hdot = 0.0;
  double eta = 0.0;  // elasticity t H'/H; +inf where H = 0
  double defect = 1.0;

  /// Builds a sample from (t, H, H'), deriving eta and the defect.
  static StrainSample from_derivative(double t, double H, double Hdot);
};

double gamma_plus(double s, Dimension n);
double gamma_minus(double s, Dimension n);

/// Inverses of gamma_plus / gamma_minus on (0, inf).
double u_plus(double t, Dimension n);
double u_minus(double t, Dimension n);

StrainSample h_plus(double t, Dimension n);
StrainSample h_minus(double t, Dimension n);

/// Sample of the principal strain of the given kind at t.
StrainSample principal_sample(PrincipalKind kind, double t, Dimension n);

double elasticity(PrincipalKind kind, double t, Dimension n);

/// [H^2 + t^2 H'^2/(n-1)]^{(n-2)/2} (H^2 - t^2 H'^2).
double characteristic(const StrainSample& sample, Dimension n);

/// Slope of the asymptote H(t) ~ Theta t at infinity (Plus or Minus only).
double asymptote_slope(PrincipalKind kind, Dimension n);

/// log H_+(e^x), evaluated without forming e^x.
double log_h_plus_at_log(double log_t, Dimension n);

/// log |H_-(e^x)|; -inf at x = 0.
double log_abs_h_minus_at_log(double log_t, Dimension n);

/// The t >= 1 with H_+(t) = y, for y >= 1.
double h_plus_inverse_above_one(double y, Dimension n);

}  // namespace nharm
