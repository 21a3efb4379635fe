#include "nharmonic/principal.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "detail/numerics.hpp"
#include "nharmonic/errors.hpp"

namespace nharm {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Both Gamma functions are parametrized by v = log((1+s)/(1-s)), so that
// s = tanh(v/2) and 1 - s^2 = sech^2(v/2) keep full relative precision as
// s -> +-1 (i.e. t -> 0 or t -> infinity).

double plus_coefficient(double n) { return (2.0 - n) / (n * std::sqrt(n - 1.0)); }
double minus_coefficient(double n) { return (n - 2.0) / (n * std::sqrt(n - 1.0)); }

double log_gamma_plus_v(double v, double n) {
  return v / n + plus_coefficient(n) * std::atan(std::tanh(0.5 * v) / std::sqrt(n - 1.0));
}

double log_gamma_minus_v(double v, double n) {
  return v / n + minus_coefficient(n) * std::atan(std::sqrt(n - 1.0) * std::tanh(0.5 * v));
}

// v with log Gamma(v) = log_t. The arctan term is bounded by |c| pi/2,
// which pins a finite bracket around the linear part.
template <class LogGamma>
double solve_v(LogGamma log_gamma, double linear_slope, double coefficient, double log_t) {
  if (log_t == 0.0) return 0.0;
  if (!std::isfinite(log_t)) {
    throw DomainError("principal inversion requires 0 < t < infinity");
  }
  const double spread = std::abs(coefficient) * std::numbers::pi / 2.0 + 1e-12;
  const double lo = (log_t - spread) / linear_slope - 1e-12;
  const double hi = (log_t + spread) / linear_slope + 1e-12;
  auto f = [&](double v) { return log_gamma(v) - log_t; };
  return detail::bracketed_root(f, lo, hi, std::numeric_limits<double>::digits - 1,
                                "Gamma inversion");
}

double solve_v_plus(double log_t, double n) {
  return solve_v([n](double v) { return log_gamma_plus_v(v, n); }, 1.0 / n,
                 plus_coefficient(n), log_t);
}

double solve_v_minus(double log_t, double n) {
  return solve_v([n](double v) { return log_gamma_minus_v(v, n); }, 1.0 / n,
                 minus_coefficient(n), log_t);
}

double log_h_plus_v(double v, double n) {
  const double u = std::tanh(0.5 * v);
  return (1.0 / n - 0.5) * std::log1p(u * u / (n - 1.0)) + (2.0 / n) * detail::log_cosh(0.5 * v);
}

// log(H_-/u), finite everywhere including t = 1.
double log_h_minus_over_u_v(double v, double n) {
  const double u = std::tanh(0.5 * v);
  return (1.0 / n - 0.5) * std::log(u * u + 1.0 / (n - 1.0)) +
         (2.0 / n) * detail::log_cosh(0.5 * v);
}

void require_positive_t(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("strain functions are defined for 0 < t < infinity");
  }
}

void require_open_unit(double s) {
  if (!(std::abs(s) < 1.0)) {
    throw DomainError("Gamma functions are defined on -1 < s < 1");
  }
}

}  // namespace

std::string_view to_string(PrincipalKind kind) {
  switch (kind) {
    case PrincipalKind::IdentityLike: return "identity";
    case PrincipalKind::InversionLike: return "inversion";
    case PrincipalKind::Plus: return "plus";
    case PrincipalKind::Minus: return "minus";
  }
  return "unknown";
}

PrincipalKind parse_principal_kind(std::string_view text) {
  if (text == "identity") return PrincipalKind::IdentityLike;
  if (text == "inversion") return PrincipalKind::InversionLike;
  if (text == "plus") return PrincipalKind::Plus;
  if (text == "minus") return PrincipalKind::Minus;
  throw DomainError("unknown principal kind '" + std::string(text) + "'");
}

StrainSample StrainSample::from_derivative(double t, double H, double Hdot) {
  if (H == 0.0 && Hdot == 0.0) {
    throw DomainError("strain sample with H = H' = 0");
  }
  StrainSample s{t, H, Hdot, 0.0, 1.0};
  if (H == 0.0) {
    s.eta = kInf;
    s.defect = -kInf;
  } else {
    s.eta = t * Hdot / H;
    s.defect = 1.0 - s.eta * s.eta;
  }
  return s;
}

double gamma_plus(double s, Dimension n) {
  require_open_unit(s);
  const double d = n.real();
  return std::exp((std::log1p(s) - std::log1p(-s)) / d +
                  plus_coefficient(d) * std::atan(s / std::sqrt(d - 1.0)));
}

double gamma_minus(double s, Dimension n) {
  require_open_unit(s);
  const double d = n.real();
  // The n-th root (not a square root) is what makes eta_- = 1/u; the two
  // coincide for n = 2.
  return std::exp((std::log1p(s) - std::log1p(-s)) / d +
                  minus_coefficient(d) * std::atan(s * std::sqrt(d - 1.0)));
}

double u_plus(double t, Dimension n) {
  require_positive_t(t);
  return std::tanh(0.5 * solve_v_plus(std::log(t), n.real()));
}

double u_minus(double t, Dimension n) {
  require_positive_t(t);
  return std::tanh(0.5 * solve_v_minus(std::log(t), n.real()));
}

StrainSample h_plus(double t, Dimension n) {
  require_positive_t(t);
  const double d = n.real();
  const double v = solve_v_plus(std::log(t), d);
  const double u = std::tanh(0.5 * v);
  const double H = std::exp(log_h_plus_v(v, d));
  return {t, H, u * H / t, u, std::exp(-2.0 * detail::log_cosh(0.5 * v))};
}

StrainSample h_minus(double t, Dimension n) {
  require_positive_t(t);
  const double d = n.real();
  const double v = solve_v_minus(std::log(t), d);
  const double u = std::tanh(0.5 * v);
  const double h_over_u = std::exp(log_h_minus_over_u_v(v, d));
  const double sh = std::sinh(0.5 * v);
  StrainSample s{t, u * h_over_u, h_over_u / t, kInf, -kInf};
  if (u != 0.0) {
    s.eta = 1.0 / u;
    s.defect = -1.0 / (sh * sh);
  }
  return s;
}

StrainSample principal_sample(PrincipalKind kind, double t, Dimension n) {
  switch (kind) {
    case PrincipalKind::IdentityLike:
      require_positive_t(t);
      return {t, t, 1.0, 1.0, 0.0};
    case PrincipalKind::InversionLike:
      require_positive_t(t);
      return {t, 1.0 / t, -1.0 / (t * t), -1.0, 0.0};
    case PrincipalKind::Plus: return h_plus(t, n);
    case PrincipalKind::Minus: return h_minus(t, n);
  }
  throw DomainError("unknown principal kind");
}

double elasticity(PrincipalKind kind, double t, Dimension n) {
  switch (kind) {
    case PrincipalKind::IdentityLike: require_positive_t(t); return 1.0;
    case PrincipalKind::InversionLike: require_positive_t(t); return -1.0;
    case PrincipalKind::Plus: return u_plus(t, n);
    case PrincipalKind::Minus: {
      const double u = u_minus(t, n);
      return u == 0.0 ? kInf : 1.0 / u;
    }
  }
  throw DomainError("unknown principal kind");
}

double characteristic(const StrainSample& s, Dimension n) {
  const double d = n.real();
  if (std::isfinite(s.eta) && std::abs(s.eta) <= 2.0) {
    // |H|^n (1 + eta^2/(n-1))^{(n-2)/2} (1 - eta^2): no cancellation.
    return std::pow(std::abs(s.H), d) *
           std::pow(1.0 + s.eta * s.eta / (d - 1.0), 0.5 * (d - 2.0)) * s.defect;
  }
  const double h2 = s.H * s.H;
  const double th2 = (s.t * s.Hdot) * (s.t * s.Hdot);
  return std::pow(h2 + th2 / (d - 1.0), 0.5 * (d - 2.0)) * (h2 - th2);
}

double asymptote_slope(PrincipalKind kind, Dimension n) {
  const double d = n.real();
  const double prefactor = std::pow(1.0 - 1.0 / d, (d - 2.0) / (2.0 * d)) * std::pow(4.0, -1.0 / d);
  const double c = (d - 2.0) / (d * std::sqrt(d - 1.0));
  switch (kind) {
    case PrincipalKind::Plus: return prefactor * std::exp(c * std::atan(1.0 / std::sqrt(d - 1.0)));
    case PrincipalKind::Minus: return prefactor * std::exp(-c * std::atan(std::sqrt(d - 1.0)));
    default: throw DomainError("asymptote slope is defined for the Plus and Minus kinds only");
  }
}

double log_h_plus_at_log(double log_t, Dimension n) {
  const double d = n.real();
  return log_h_plus_v(solve_v_plus(log_t, d), d);
}

double log_abs_h_minus_at_log(double log_t, Dimension n) {
  const double d = n.real();
  const double v = solve_v_minus(log_t, d);
  if (v == 0.0) return -kInf;
  return std::log(std::abs(std::tanh(0.5 * v))) + log_h_minus_over_u_v(v, d);
}

double h_plus_inverse_above_one(double y, Dimension n) {
  if (!(y >= 1.0) || !std::isfinite(y)) {
    throw DomainError("H_+ takes values in [1, infinity)");
  }
  if (y == 1.0) return 1.0;
  const double d = n.real();
  const double log_y = std::log(y);
  // log H_+(v) >= (2/n)(v/2 - log 2) + (1/n - 1/2) log(n/(n-1)) gives an upper bracket.
  const double v_hi =
      d * (log_y + (0.5 - 1.0 / d) * std::log(d / (d - 1.0))) + 2.0 * std::numbers::ln2 + 1.0;
  auto f = [&](double v) { return log_h_plus_v(v, d) - log_y; };
  const double v = detail::bracketed_root(f, 0.0, v_hi, std::numeric_limits<double>::digits - 1,
                                          "H_+ inversion");
  return std::exp(log_gamma_plus_v(v, d));
}

}  // namespace nharm
