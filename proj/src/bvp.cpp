#include "nharmonic/bvp.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "detail/numerics.hpp"
#include "nharmonic/errors.hpp"

namespace nharm {
namespace {

constexpr double kCaseBand = 1e-12;

bool within_band(double x, double target) {
  return std::abs(x - target) <= kCaseBand * std::abs(target);
}

// Sign of H(ka) - rho H(kb), scaled into [-1, 1] so that neither the
// pole-free endpoints nor large k produce overflow.
struct RatioResidual {
  PrincipalKind kind;
  double a, b, rho;
  Dimension n;

  double operator()(double log_k) const {
    const double k = std::exp(log_k);
    const double ha = principal_sample(kind, k * a, n).H;
    const double hb = principal_sample(kind, k * b, n).H;
    const double num = ha - rho * hb;
    const double den = std::abs(ha) + std::abs(rho * hb);
    return den == 0.0 ? 0.0 : num / den;
  }
};

// Walks away from `anchor` in direction `dir` until the residual reaches the
// sign `want`, returning the far end of the bracket.
double expand_bracket(const RatioResidual& f, double anchor, double dir, bool want_positive) {
  double step = 0.5;
  for (int i = 0; i < 80; ++i) {
    const double x = anchor + dir * step;
    const double fx = f(x);
    if (fx == 0.0 || (fx > 0.0) == want_positive) return x;
    step *= 2.0;
  }
  throw NumericalError("radial BVP: could not bracket the scaling parameter k", 0.0);
}

RadialMap scaled(PrincipalKind kind, double lambda, double k, double a, double b) {
  RadialMap m;
  m.kind = kind;
  m.lambda = lambda;
  m.k = k;
  m.domain = Annulus(a, b);
  return m;
}

void check_boundary(const RadialMap& m, const BvpProblem& p, Dimension n) {
  const double scale = std::max(std::abs(p.alpha), std::abs(p.beta));
  const double ea = std::abs(m.sample(p.a, n).H - p.alpha);
  const double eb = std::abs(m.sample(p.b, n).H - p.beta);
  if (ea > 1e-8 * scale || eb > 1e-8 * scale) {
    throw NumericalError("radial BVP: boundary values missed", std::max(ea, eb));
  }
}

}  // namespace

Annulus RadialMap::full_domain() const {
  return hammer_zone ? Annulus(hammer_zone->inner(), domain.outer()) : domain;
}

StrainSample RadialMap::sample(double t, Dimension n) const {
  if (hammer_zone && t < domain.inner()) {
    return {t, *hammer_to, 0.0, 0.0, 1.0};
  }
  const StrainSample p = principal_sample(kind, k * t, n);
  return {t, lambda * p.H, lambda * k * p.Hdot, p.eta, p.defect};
}

double RadialMap::characteristic_constant(Dimension n) const {
  const double scale = std::pow(std::abs(lambda), n.real());
  switch (kind) {
    case PrincipalKind::Plus: return scale;
    case PrincipalKind::Minus: return -scale;
    default: return 0.0;
  }
}

double q_ratio(PrincipalKind kind, double k, double a, double b, Dimension n) {
  if (!(k > 0.0) || !(a > 0.0) || !(a < b)) {
    throw DomainError("q_ratio requires k > 0 and 0 < a < b");
  }
  const double hb = principal_sample(kind, k * b, n).H;
  if (hb == 0.0) {
    throw DomainError("q_ratio: pole at k b = 1 for the Minus kind");
  }
  return principal_sample(kind, k * a, n).H / hb;
}

BvpSolution solve_radial_bvp(const BvpProblem& p, Dimension n) {
  if (!(p.a > 0.0) || !(p.a < p.b) || !std::isfinite(p.b)) {
    throw DomainError("radial BVP requires 0 < a < b < infinity");
  }
  if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || (p.alpha == 0.0 && p.beta == 0.0)) {
    throw DomainError("radial BVP requires finite boundary values, not both zero");
  }
  const double a = p.a, b = p.b;

  auto finish = [&](PrincipalKind kind, double lambda, double k) {
    BvpSolution s{scaled(kind, lambda, k, a, b), 0.0};
    s.c = s.map.characteristic_constant(n);
    check_boundary(s.map, p, n);
    return s;
  };

  if (p.beta == 0.0) {
    return finish(PrincipalKind::Minus, p.alpha / h_minus(a / b, n).H, 1.0 / b);
  }

  const double rho = p.alpha / p.beta;
  if (within_band(rho, a / b)) return finish(PrincipalKind::IdentityLike, p.alpha, 1.0 / a);
  if (within_band(rho, b / a)) return finish(PrincipalKind::InversionLike, p.alpha, 1.0 / a);

  const int bits = std::numeric_limits<double>::digits - 3;
  PrincipalKind kind;
  double log_k;
  if (rho < a / b) {
    // H_-(ka)/H_-(kb) rises from -inf (k -> 1/b) to a/b (k -> inf).
    kind = PrincipalKind::Minus;
    RatioResidual f{kind, a, b, rho, n};
    const double lo = -std::log(b);
    const double hi = expand_bracket(f, lo, 1.0, true);
    log_k = detail::bracketed_root(f, lo, hi, bits, "radial BVP (expanding)");
  } else if (rho > b / a) {
    // For k < 1/b both values are negative and the ratio falls from +inf to b/a as k -> 0.
    kind = PrincipalKind::Minus;
    RatioResidual f{kind, a, b, rho, n};
    const double hi = -std::log(b);
    const double lo = expand_bracket(f, hi, -1.0, true);
    log_k = detail::bracketed_root(f, lo, hi, bits, "radial BVP (inverted expanding)");
  } else {
    // H_+ is symmetric under t -> 1/t, so the ratio equals 1 at k = 1/sqrt(ab).
    kind = PrincipalKind::Plus;
    RatioResidual f{kind, a, b, rho, n};
    const double centre = -0.5 * (std::log(a) + std::log(b));
    if (rho == 1.0) {
      log_k = centre;
    } else {
      // The residual has the sign of 1 - rho at the centre; walk until it flips.
      const double dir = rho < 1.0 ? 1.0 : -1.0;
      const double far = expand_bracket(f, centre, dir, rho > 1.0);
      log_k = detail::bracketed_root(f, std::min(centre, far), std::max(centre, far), bits,
                                     "radial BVP (contracting)");
    }
  }

  const double k = std::exp(log_k);
  // dQ/dlog k has the sign of ka H'(ka) H(kb) - kb H'(kb) H(ka); the ratio
  // must rise for Minus and fall for Plus.
  const StrainSample sa = principal_sample(kind, k * a, n);
  const StrainSample sb = principal_sample(kind, k * b, n);
  const double slope = sa.t * sa.Hdot * sb.H - sb.t * sb.Hdot * sa.H;
  if (kind == PrincipalKind::Plus ? !(slope < 0.0) : !(slope > 0.0)) {
    throw NumericalError("radial BVP: ratio Q is not monotone at the root", slope);
  }
  return finish(kind, p.beta / principal_sample(kind, k * b, n).H, k);
}

BvpSolution fit_annuli(const Annulus& source, const Annulus& target, Dimension n) {
  return solve_radial_bvp({source.inner(), source.outer(), target.inner(), target.outer()}, n);
}

}  // namespace nharm
