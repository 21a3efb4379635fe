#include "nharmonic/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "detail/numerics.hpp"
#include "nharmonic/errors.hpp"

namespace nharm {
namespace {

constexpr int kRootBits = std::numeric_limits<double>::digits - 2;

double integrand(const StrainSample& s, double n, Functional f) {
  switch (f) {
    case Functional::ConformalE: {
      const double th = s.t * s.Hdot;
      return std::pow(th * th + (n - 1.0) * s.H * s.H, 0.5 * n);
    }
    case Functional::WeightedF:
      if (s.H == 0.0) throw DomainError("weighted energy is undefined where H vanishes");
      return std::pow(s.eta * s.eta + n - 1.0, 0.5 * n);
    case Functional::OperatorNormF:
      if (s.H == 0.0) throw DomainError("weighted energy is undefined where H vanishes");
      return std::pow(std::max(std::abs(s.eta), 1.0), n);
  }
  return 0.0;
}

// Rejects profiles whose Jacobian changes sign (H' of both signs) or that
// pass through the origin, before a weighted functional is integrated.
void require_weighted_admissible(const StrainProfile& p) {
  const double lo = std::log(p.domain().inner());
  const double hi = std::log(p.domain().outer());
  bool pos = false, neg = false;
  constexpr int kScan = 64;
  for (int i = 0; i <= kScan; ++i) {
    const StrainSample s = p(std::exp(lo + (hi - lo) * i / kScan));
    if (s.H == 0.0) throw DomainError("weighted energy: H vanishes inside the annulus");
    pos = pos || s.Hdot > 0.0;
    neg = neg || s.Hdot < 0.0;
  }
  if (pos && neg) {
    throw DomainError("weighted energy: H' changes sign, the map is not a homeomorphism");
  }
}

Modulus image_modulus(double h_inner, double h_outer, Dimension n) {
  const double lo = std::min(std::abs(h_inner), std::abs(h_outer));
  const double hi = std::max(std::abs(h_inner), std::abs(h_outer));
  if (!(lo > 0.0) || !(hi > lo)) return {0.0, 0.0};
  return modulus(Annulus(lo, hi), n);
}

RadialMap smooth_part(const RadialMap& map) {
  RadialMap m = map;
  m.hammer_to.reset();
  m.hammer_zone.reset();
  return m;
}

// Hammer zone collapsed onto the sphere of radius hammer_to: |h_N| = 0 and
// |h_T| = hammer_to / t, so every functional integrates a constant in log t.
double hammer_term(const RadialMap& map, Dimension n, Functional f) {
  if (!map.hammered()) return 0.0;
  const double d = n.real();
  const double mod = modulus(*map.hammer_zone, n).value;
  switch (f) {
    case Functional::ConformalE:
      return std::pow(d - 1.0, 0.5 * d) * std::pow(*map.hammer_to, d) * mod;
    case Functional::WeightedF: return std::pow(d - 1.0, 0.5 * d) * mod;
    case Functional::OperatorNormF: return mod;
  }
  return 0.0;
}

double planar_closed_form(const RadialMap& m) {
  double omega = 0.0;
  switch (m.kind) {
    case PrincipalKind::Plus: omega = m.lambda * m.lambda; break;
    case PrincipalKind::Minus: omega = -m.lambda * m.lambda; break;
    case PrincipalKind::IdentityLike: break;
    case PrincipalKind::InversionLike:
      throw DomainError("planar closed form does not cover the inversion");
  }
  const Dimension two(2);
  const double rs = m.sample(m.domain.inner(), two).H;
  const double Rs = m.sample(m.domain.outer(), two).H;
  if (!(rs > 0.0) || !(Rs > rs) || (m.kind == PrincipalKind::Plus && m.k * m.domain.inner() < 1.0)) {
    throw DomainError("planar closed form needs an increasing Nitsche map with H > 0");
  }
  return 2.0 * std::numbers::pi *
         (Rs * std::sqrt(std::max(0.0, Rs * Rs - omega)) -
          rs * std::sqrt(std::max(0.0, rs * rs - omega)));
}

template <class F>
QuadratureResult integrate_log_segments(F&& f, const std::vector<double>& nodes,
                                        const QuadratureOptions& opt) {
  QuadratureResult total{0.0, 0.0};
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const QuadratureResult part = detail::integrate(f, nodes[i], nodes[i + 1], opt);
    total.value += part.value;
    total.error += part.error;
  }
  return total;
}

}  // namespace

std::string_view to_string(Functional f) {
  switch (f) {
    case Functional::ConformalE: return "E";
    case Functional::WeightedF: return "F";
    case Functional::OperatorNormF: return "F_op";
  }
  return "unknown";
}

Functional parse_functional(std::string_view text) {
  if (text == "E") return Functional::ConformalE;
  if (text == "F") return Functional::WeightedF;
  if (text == "F_op") return Functional::OperatorNormF;
  throw DomainError("unknown functional '" + std::string(text) + "' (expected E, F or F_op)");
}

EnergyReport profile_energy(const StrainProfile& profile, Dimension n, Functional f,
                            const QuadratureOptions& opt) {
  if (f != Functional::ConformalE) require_weighted_admissible(profile);
  const double d = n.real();
  auto g = [&](double s) { return integrand(profile(std::exp(s)), d, f); };
  const QuadratureResult q = integrate_log_segments(g, profile.log_nodes(), opt);
  const double w = sphere_area(n);
  EnergyReport rep;
  rep.value = w * q.value;
  rep.functional = f;
  rep.formula_id = std::string(kFormulaQuadrature);
  rep.quad_error = w * q.error;
  rep.mod_source = modulus(profile.domain(), n);
  rep.mod_target = image_modulus(profile(profile.domain().inner()).H,
                                 profile(profile.domain().outer()).H, n);
  return rep;
}

EnergyReport radial_energy(const RadialMap& map, Dimension n, Functional f,
                           const QuadratureOptions& opt) {
  const std::string id = map.hammered() ? std::string(kHammerPrefix) + std::string(kFormulaQuadrature)
                                        : std::string(kFormulaQuadrature);
  return evaluate_energy(map, n, f, id, opt);
}

EnergyReport evaluate_energy(const RadialMap& map, Dimension n, Functional f,
                             std::string_view formula_id, const QuadratureOptions& opt) {
  std::string_view base = formula_id;
  const bool prefixed = base.starts_with(kHammerPrefix);
  if (prefixed) base.remove_prefix(kHammerPrefix.size());
  if (prefixed != map.hammered()) {
    throw DomainError("formula '" + std::string(formula_id) + "' does not match the map's hammer zone");
  }

  const RadialMap smooth = smooth_part(map);
  EnergyReport rep;
  if (base == kFormulaQuadrature) {
    rep = profile_energy(to_profile(smooth, n), n, f, opt);
  } else if (base == kFormulaConformalVolume) {
    if (f != Functional::ConformalE ||
        (smooth.kind != PrincipalKind::IdentityLike && smooth.kind != PrincipalKind::InversionLike)) {
      throw DomainError("conformal-volume formula applies to the conformal energy of conformal maps");
    }
    const double a = std::abs(smooth.sample(smooth.domain.inner(), n).H);
    const double b = std::abs(smooth.sample(smooth.domain.outer(), n).H);
    const Annulus image(std::min(a, b), std::max(a, b));
    rep.value = std::pow(n.real(), 0.5 * n.real()) * volume(image, n);
  } else if (base == kFormulaPlanar) {
    if (n.value() != 2 || f != Functional::ConformalE) {
      throw DomainError("planar closed form applies to the conformal energy in dimension 2");
    }
    rep.value = planar_closed_form(smooth);
  } else {
    throw DomainError("unknown energy formula '" + std::string(formula_id) + "'");
  }

  rep.value += hammer_term(map, n, f);
  rep.functional = f;
  rep.formula_id = std::string(formula_id);
  const Annulus whole = map.full_domain();
  rep.mod_source = modulus(whole, n);
  rep.mod_target = image_modulus(map.sample(whole.inner(), n).H, map.sample(whole.outer(), n).H, n);
  return rep;
}

std::string preferred_formula(const RadialMap& map, Dimension n) {
  std::string base(kFormulaQuadrature);
  if (map.kind == PrincipalKind::IdentityLike || map.kind == PrincipalKind::InversionLike) {
    base = kFormulaConformalVolume;
  } else if (n.value() == 2 && map.lambda > 0.0 && map.k * map.domain.inner() >= 1.0) {
    base = kFormulaPlanar;
  }
  return map.hammered() ? std::string(kHammerPrefix) + base : base;
}

CoefficientPair coefficient_pair(double alpha, Dimension n, CoefficientBranch branch) {
  const double d = n.real();
  const double common = std::pow(alpha * alpha + d - 1.0, 0.5 * (d - 2.0));
  CoefficientPair p;
  p.alpha = alpha;
  p.branch = branch;
  if (branch == CoefficientBranch::Expanding) {
    if (!(alpha >= 1.0) || alpha > alpha_n(n)) {
      throw DomainError("expanding coefficients need 1 <= alpha <= alpha_n");
    }
    p.a = common * (alpha * alpha - 1.0) / std::pow(alpha, d);
    p.b = d * common / alpha;
  } else {
    if (!(alpha >= 0.0) || alpha > 1.0) {
      throw DomainError("contracting coefficients need 0 <= alpha <= 1");
    }
    p.a = (d - 1.0) * common * (1.0 - alpha * alpha);
    p.b = d * alpha * common;
  }
  return p;
}

double coefficient_gap(const CoefficientPair& p, double X, double Y, Dimension n) {
  if (!(X >= 0.0) || !(Y >= 0.0)) throw DomainError("coefficient inequality needs X, Y >= 0");
  const double d = n.real();
  const double lhs = std::pow(X * X + (d - 1.0) * Y * Y, 0.5 * d);
  const double cross = p.b * X * std::pow(Y, d - 1.0);
  const double lead = p.branch == CoefficientBranch::Expanding ? p.a * std::pow(X, d)
                                                                : p.a * std::pow(Y, d);
  return lhs - lead - cross;
}

double eta_of_tau(double tau, double c_or_q, Dimension n, CoefficientBranch branch) {
  if (!(tau > 0.0)) throw DomainError("eta_of_tau needs tau > 0");
  const double d = n.real();
  const double m = 0.5 * (d - 2.0);
  const double rhs = c_or_q / std::pow(tau, d);
  if (branch == CoefficientBranch::Contracting) {
    if (!(c_or_q > 0.0)) throw DomainError("contracting branch needs c > 0");
    if (rhs > 1.0 + 1e-12) throw DomainError("contracting branch needs c <= tau^n");
    if (rhs >= 1.0) return 0.0;
    // Solved in x = eta^2; the left side falls from 1 at x = 0 to 0 at x = 1.
    auto g = [&](double x) { return std::pow(1.0 + x / (d - 1.0), m) * (1.0 - x) - rhs; };
    return std::sqrt(detail::bracketed_root(g, 0.0, 1.0, 1.0 - rhs, -rhs, kRootBits, "eta(tau)"));
  }
  if (!(c_or_q > 0.0)) throw DomainError("expanding branch needs q > 0");
  auto g = [&](double x) { return std::pow(d - 1.0 + x, m) * (x - 1.0) - rhs; };
  const double hi = 1.0 + 2.0 * rhs / std::pow(d, m);
  return std::sqrt(detail::bracketed_root(g, 1.0, hi, kRootBits, "eta(tau)"));
}

double contracting_bound_energy(double c, const Annulus& source, const Annulus& target,
                                Dimension n, const QuadratureOptions& opt) {
  const double d = n.real();
  // eta vanishes like a square root at tau = c^(1/n), which is the inner radius for critical
  // and hammered maps; s = s0 + (s1 - s0) w^2 makes the integrand smooth there.
  const double s0 = std::log(target.inner());
  const double span = std::log(target.outer()) - s0;
  auto g = [&](double w) {
    const double tau = std::exp(s0 + span * w * w);
    const double eta = eta_of_tau(tau, c, n, CoefficientBranch::Contracting);
    return 2.0 * span * w * std::pow(tau, d) * d * eta * std::pow(eta * eta + d - 1.0, 0.5 * (d - 2.0));
  };
  const auto q = detail::integrate(g, 0.0, 1.0, opt);
  return std::pow(d - 1.0, 0.5 * d) * c * modulus(source, n).value + sphere_area(n) * q.value;
}

double expanding_bound_energy(double c, const Annulus& source, const Annulus& target,
                              Dimension n, const QuadratureOptions& opt) {
  const double d = n.real();
  const double q = -std::pow(d - 1.0, 0.5 * (d - 2.0)) * c;
  auto g = [&](double s) {
    const double tau = std::exp(s);
    const double eta = eta_of_tau(tau, q, n, CoefficientBranch::Expanding);
    return std::pow(tau, d) * d * std::pow(eta * eta + d - 1.0, 0.5 * (d - 2.0)) / eta;
  };
  const auto r = detail::integrate(g, std::log(target.inner()), std::log(target.outer()), opt);
  return q * modulus(source, n).value + sphere_area(n) * r.value;
}

PlanarMinimizer planar_minimal_energy(const Annulus& source, const Annulus& target) {
  const Dimension two(2);
  const double r = source.inner(), R = source.outer();
  const double rs = target.inner(), Rs = target.outer();
  const double L = source.log_ratio();
  const PairClassification pc = classify(source, target, two);

  // log of (R* + sqrt(R*^2 - w)) / (r* + sqrt(r*^2 - w)) minus log(R/r); increasing in w.
  auto G = [&](double w) {
    return std::log(Rs + std::sqrt(std::max(0.0, Rs * Rs - w))) -
           std::log(rs + std::sqrt(std::max(0.0, rs * rs - w))) - L;
  };

  PlanarMinimizer out;
  double omega = 0.0;
  switch (pc.regime) {
    case Regime::Conformal: break;
    case Regime::ContractingWithin: {
      const double top = rs * rs;
      omega = G(top) <= 0.0 ? top : detail::bracketed_root(G, 0.0, top, kRootBits, "planar omega");
      break;
    }
    case Regime::ContractingBelow:
      omega = rs * rs;
      out.hammered = true;
      break;
    case Regime::ExpandingWithin:
    case Regime::ExpandingAbove: {
      // omega = -e^x; G falls with x from Ls - L > 0 towards -L.
      auto Gx = [&](double x) { return G(-std::exp(x)); };
      double hi = std::log(Rs * Rs);
      while (Gx(hi) > 0.0) hi += 1.0;
      double lo = hi - 1.0;
      while (Gx(lo) < 0.0 && lo > -700.0) lo -= 1.0;
      omega = -std::exp(detail::bracketed_root(Gx, lo, hi, kRootBits, "planar omega"));
      break;
    }
  }

  const double sigma = (Rs + std::sqrt(Rs * Rs - omega)) / R;
  out.spec = {omega, sigma};
  RadialMap& m = out.map;
  m.domain = source;
  if (omega == 0.0) {
    m.kind = PrincipalKind::IdentityLike;
    m.lambda = rs;
    m.k = 1.0 / r;
  } else {
    m.kind = omega > 0.0 ? PrincipalKind::Plus : PrincipalKind::Minus;
    m.lambda = std::sqrt(std::abs(omega));
    m.k = sigma / m.lambda;
  }
  if (out.hammered) {
    const double rho = rs / sigma;
    m.domain = Annulus(rho, R);
    m.k = 1.0 / rho;
    m.hammer_to = rs;
    m.hammer_zone = Annulus(r, rho);
  }
  out.energy = evaluate_energy(m, two, Functional::ConformalE, preferred_formula(m, two));
  return out;
}

EnergyReport operator_norm_lower_bound(const Annulus& source, const Annulus& target, Dimension n) {
  EnergyReport rep;
  rep.functional = Functional::OperatorNormF;
  rep.formula_id = "operator_norm_bound";
  rep.mod_source = modulus(source, n);
  rep.mod_target = modulus(target, n);
  const double alpha = rep.mod_target.log_ratio / rep.mod_source.log_ratio;
  rep.value = std::max(1.0, std::pow(alpha, n.real())) * rep.mod_source.value;
  return rep;
}

std::string_view to_string(FMinimality s) {
  switch (s) {
    case FMinimality::ProvenMinimal: return "proven_minimal";
    case FMinimality::NotPowerStretching: return "not_power_stretching";
    case FMinimality::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

FMinimality f_minimality_status(const Annulus& source, const Annulus& target, Dimension n) {
  const double alpha = target.log_ratio() / source.log_ratio();
  if (n.value() <= 3 || alpha < alpha_n(n)) return FMinimality::ProvenMinimal;
  const double d = n.real();
  if (alpha > std::sqrt((d - 1.0) / (d - 3.0))) return FMinimality::NotPowerStretching;
  return FMinimality::Indeterminate;
}

DistortionCheck distortion_integral_check(const StrainProfile& profile, Dimension n,
                                          const QuadratureOptions& opt) {
  const double d = n.real();
  const double a = profile.domain().inner(), b = profile.domain().outer();
  const double ha = profile(a).H, hb = profile(b).H;
  if (!(ha > 0.0) || !(hb > ha)) {
    throw DomainError("distortion identities need an increasing strain with H > 0");
  }
  // Inverse strain F = H^{-1} by root finding in log t.
  auto inverse = [&](double log_s) {
    auto g = [&](double x) { return std::log(profile(std::exp(x)).H) - log_s; };
    return std::exp(detail::bracketed_root(g, std::log(a), std::log(b), kRootBits, "inverse strain"));
  };
  // ||D#f||^n / det D#f at radius s, with D#f the cofactor matrix of Df.
  auto ratio = [&](double log_s) {
    const double s = std::exp(log_s);
    const double F = inverse(log_s);
    const double Fp = 1.0 / profile(F).Hdot;
    const double q = F / s;
    const double norm2 = std::pow(q, 2.0 * (d - 1.0)) + (d - 1.0) * Fp * Fp * std::pow(q, 2.0 * (d - 2.0));
    const double det = std::pow(Fp * std::pow(q, d - 1.0), d - 1.0);
    return std::pow(norm2, 0.5 * d) / det;
  };

  std::vector<double> nodes{std::log(ha)};
  for (double t : profile.breakpoints()) nodes.push_back(std::log(profile(t).H));
  nodes.push_back(std::log(hb));

  const double w = sphere_area(n);
  DistortionCheck out;
  out.inner_distortion_e =
      w * integrate_log_segments([&](double ls) { return ratio(ls) * std::exp(d * ls); }, nodes, opt).value;
  out.inner_distortion_f = w * integrate_log_segments(ratio, nodes, opt).value;
  out.energy_e = profile_energy(profile, n, Functional::ConformalE, opt).value;
  out.energy_f = profile_energy(profile, n, Functional::WeightedF, opt).value;
  out.residual_e = std::abs(out.inner_distortion_e - out.energy_e);
  out.residual_f = std::abs(out.inner_distortion_f - out.energy_f);
  return out;
}

DistortionCheck distortion_integral_check(const RadialMap& map, Dimension n,
                                          const QuadratureOptions& opt) {
  if (map.hammered()) throw DomainError("distortion identities need a homeomorphism");
  return distortion_integral_check(to_profile(map, n), n, opt);
}

Dilatations power_stretching_dilatations(double alpha, Dimension n) {
  if (!(alpha > 0.0)) throw DomainError("power stretching needs alpha > 0");
  const double d = n.real();
  return {std::max(1.0 / alpha, std::pow(alpha, d - 1.0)),
          std::max(std::pow(alpha, 1.0 - d), alpha)};
}

QcCheck qc_bounds(const Annulus& source, const Annulus& target, Dimension n, double k_outer,
                  double k_inner) {
  if (!(k_outer >= 1.0) || !(k_inner >= 1.0)) throw DomainError("dilatations must be >= 1");
  const double alpha = target.log_ratio() / source.log_ratio();
  QcCheck c;
  c.ratio_power = std::pow(alpha, n.real() - 1.0);
  c.lower_margin = c.ratio_power - 1.0 / k_inner;
  c.upper_margin = k_outer - c.ratio_power;
  c.lower_holds = c.lower_margin >= 0.0;
  c.upper_holds = c.upper_margin >= 0.0;
  return c;
}

}  // namespace nharm
