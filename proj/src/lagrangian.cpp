#include "nharmonic/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "detail/numerics.hpp"
#include "nharmonic/errors.hpp"
#include "nharmonic/nitsche.hpp"

namespace nharm {
namespace {

constexpr double kPi = std::numbers::pi;

bool close(double x, double y, double rel) { return std::abs(x - y) <= rel * std::max(std::abs(x), std::abs(y)); }

void require_radial_homeomorphism(const StrainProfile& p, const Annulus& source,
                                  const Annulus& target, Dimension n) {
  (void)n;
  if (!close(p.domain().inner(), source.inner(), 1e-12) || !close(p.domain().outer(), source.outer(), 1e-12)) {
    throw DomainError("profile domain differs from the source annulus");
  }
  if (!close(p(source.inner()).H, target.inner(), 1e-8) || !close(p(source.outer()).H, target.outer(), 1e-8)) {
    throw DomainError("profile does not take the boundary spheres onto the target's, in order");
  }
  const double lo = std::log(source.inner()), hi = std::log(source.outer());
  constexpr int kScan = 128;
  for (int i = 0; i <= kScan; ++i) {
    const StrainSample s = p(std::exp(lo + (hi - lo) * i / kScan));
    if (!(s.H > 0.0) || s.Hdot < 0.0) {
      throw DomainError("profile is not an increasing radial homeomorphism");
    }
  }
}

// Integrals over the source in s = log t of the three pulled-back forms.
// With h_N = H', h_T = H/t and dx = omega t^{n-1} dt.
LagrangianTriple lagrangian_integrals(const StrainProfile& p, Dimension n,
                                      const QuadratureOptions& opt) {
  const double d = n.real();
  const double w = sphere_area(n);
  const auto nodes = p.log_nodes();
  auto sum = [&](auto&& f) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      total += detail::integrate(f, nodes[i], nodes[i + 1], opt).value;
    }
    return w * total;
  };
  LagrangianTriple out;
  out.jacobian = sum([&](double s) {
    const double t = std::exp(s);
    const StrainSample x = p(t);
    const double hn = std::abs(x.Hdot), ht = std::abs(x.H) / t;
    return hn * std::pow(ht, d - 1.0) * std::pow(t, d);
  });
  out.target_modulus = sum([&](double s) {
    const double t = std::exp(s);
    const StrainSample x = p(t);
    return std::abs(x.Hdot) / (std::abs(x.H) * std::pow(t, d - 1.0)) * std::pow(t, d);
  });
  out.source_modulus = sum([&](double s) {
    const double t = std::exp(s);
    const StrainSample x = p(t);
    const double ht = std::abs(x.H) / t;
    return std::pow(ht / std::abs(x.H), d - 1.0) / t * std::pow(t, d);
  });
  return out;
}

}  // namespace

FreeLagrangianReport verify_free_lagrangians(const StrainProfile& profile, const Annulus& source,
                                             const Annulus& target, Dimension n,
                                             const QuadratureOptions& opt) {
  require_radial_homeomorphism(profile, source, target, n);
  FreeLagrangianReport r;
  r.lhs = lagrangian_integrals(profile, n, opt);
  r.rhs.jacobian = volume(target, n);
  r.rhs.target_modulus = modulus(target, n).value;
  r.rhs.source_modulus = modulus(source, n).value;
  r.residual.jacobian = std::abs(r.lhs.jacobian - r.rhs.jacobian);
  r.residual.target_modulus = std::abs(r.lhs.target_modulus - r.rhs.target_modulus);
  r.residual.source_modulus = std::abs(r.lhs.source_modulus - r.rhs.source_modulus);
  return r;
}

FreeLagrangianReport verify_free_lagrangians(const RadialMap& map, const Annulus& source,
                                             const Annulus& target, Dimension n,
                                             const QuadratureOptions& opt) {
  return verify_free_lagrangians(to_profile(map, n), source, target, n, opt);
}

LagrangianTriple free_lagrangian_estimates(const StrainProfile& profile, const Annulus& source,
                                           const Annulus& target, Dimension n,
                                           const QuadratureOptions& opt) {
  const FreeLagrangianReport r = verify_free_lagrangians(profile, source, target, n, opt);
  return {r.lhs.jacobian - r.rhs.jacobian, r.lhs.target_modulus - r.rhs.target_modulus,
          r.lhs.source_modulus - r.rhs.source_modulus};
}

MeridianSample homothety_profile(double lambda, double theta) {
  if (!(lambda > 0.0)) throw DomainError("spherical homothety needs lambda > 0");
  if (!(theta >= 0.0 && theta <= kPi)) throw DomainError("meridian angle must lie in [0, pi]");
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  MeridianSample m;
  m.theta = theta;
  m.phi = 2.0 * std::atan2(lambda * s, c);
  m.phi_dot = 1.0 / (c * c / lambda + lambda * s * s);
  const double st = std::sin(theta);
  m.dbar_norm = st > 1e-8 ? std::sin(m.phi) / st : m.phi_dot;
  return m;
}

namespace {

// Mean over S^{n-1} of g(phi_dot) for a longitude-preserving map, reduced to
// the meridian with weight sin^{n-2}(theta).
template <class G>
double sphere_mean(double lambda, Dimension n, G&& g, const QuadratureOptions& opt) {
  const double d = n.real();
  auto weight = [d](double th) { return std::pow(std::sin(th), d - 2.0); };
  const double num = detail::integrate(
      [&](double th) { return g(homothety_profile(lambda, th).phi_dot) * weight(th); }, 0.0, kPi, opt).value;
  const double den = detail::integrate(weight, 0.0, kPi, opt).value;
  return num / den;
}

}  // namespace

double homothety_jacobian_mean(double lambda, Dimension n, const QuadratureOptions& opt) {
  const double d = n.real();
  return sphere_mean(lambda, n, [d](double pd) { return std::pow(pd, d - 1.0); }, opt);
}

double sphere_energy_T(double alpha, double lambda, Dimension n, const QuadratureOptions& opt) {
  if (!(alpha > 0.0)) throw DomainError("sphere energy needs alpha > 0");
  const double d = n.real();
  return sphere_mean(
      lambda, n, [&](double pd) { return std::pow(alpha * alpha + (d - 1.0) * pd * pd, 0.5 * d); }, opt);
}

bool expanding_witness_hypotheses(const Annulus& source, const Annulus& target, Dimension n) {
  if (n.value() < 4) return false;
  const double dn = delta_n(n);
  const double ratio = source.outer() / source.inner();
  if (!(ratio < dn)) return false;
  const double threshold = h_minus(dn, n).H / h_minus(dn / ratio, n).H;
  return target.outer() / target.inner() > threshold;
}

NonRadialWitness nonradial_witness(const Annulus& source, const Annulus& target, Dimension n,
                                   Functional functional, const QuadratureOptions& opt) {
  if (n.value() < 4) throw DomainError("non-radial witnesses exist only for n >= 4");
  const double d = n.real();
  const double shrink = std::sqrt((d - 3.0) / (d - 1.0));

  NonRadialWitness w;
  w.functional = functional;
  double eta_min = 0.0;
  std::function<double(double)> energy_of;

  if (functional == Functional::WeightedF) {
    const double alpha = target.log_ratio() / source.log_ratio();
    if (!(alpha * shrink > 1.0)) {
      throw DomainError("F-witness needs Mod A*/Mod A > sqrt((n-1)/(n-3))");
    }
    const double mod = modulus(source, n).value;
    w.radial_energy = std::pow(alpha * alpha + d - 1.0, 0.5 * d) * mod;
    eta_min = alpha;
    energy_of = [=, &opt](double lambda) { return sphere_energy_T(alpha, lambda, n, opt) * mod; };
  } else if (functional == Functional::ConformalE) {
    if (!expanding_witness_hypotheses(source, target, n)) {
      throw DomainError("E-witness needs 1 < R/r < delta_n and R*/r* > H_-(delta_n)/H_-(delta_n r/R)");
    }
    const RadialMap radial = fit_annuli(source, target, n).map;
    w.radial_energy = radial_energy(radial, n, Functional::ConformalE, opt).value;
    eta_min = radial.sample(source.outer(), n).eta;
    const double lo = std::log(source.inner()), hi = std::log(source.outer());
    const double omega = sphere_area(n);
    energy_of = [=, &opt](double lambda) {
      auto g = [&](double s) {
        const StrainSample x = radial.sample(std::exp(s), n);
        return std::pow(x.H, d) * sphere_energy_T(x.eta, lambda, n, opt);
      };
      return omega * detail::integrate(g, lo, hi, opt).value;
    };
  } else {
    throw DomainError("non-radial witnesses are built for E and F only");
  }

  const double reach = shrink * eta_min;
  for (double lambda : kWitnessLambdas) {
    WitnessCandidate c;
    c.lambda = lambda;
    c.admissible = std::max(lambda, 1.0 / lambda) <= reach;
    w.scan.push_back(c);
  }
  const bool any_admissible =
      std::any_of(w.scan.begin(), w.scan.end(), [](const WitnessCandidate& c) { return c.admissible; });

  const WitnessCandidate* best = nullptr;
  for (auto& c : w.scan) {
    if (any_admissible && !c.admissible) continue;
    c.energy = energy_of(c.lambda);
    c.gap = w.radial_energy - c.energy;
    if (!best || c.gap > best->gap) best = &c;
  }
  w.lambda = best->lambda;
  w.witness_energy = best->energy;
  w.gap = best->gap;
  w.conclusive = best->gap > 0.0;
  return w;
}

DiscreteVariable TwoPointVariable::as_discrete() const {
  return {{0.0, high_value}, {1.0 - mass_high, mass_high}};
}

TwoPointVariable optimal_two_point(double alpha, Dimension n) {
  const double an = alpha_n(n);
  if (!std::isfinite(an) || !(alpha > an)) {
    throw DomainError("the two-point extremal needs n >= 4 and alpha > alpha_n");
  }
  const double d = n.real();
  return {std::pow(alpha / an, d - 1.0), std::pow(an / alpha, d - 1.0)};
}

double random_variable_energy(double alpha, Dimension n, const DiscreteVariable& X) {
  if (X.values.size() != X.masses.size() || X.values.empty()) {
    throw DomainError("random variable needs matching values and masses");
  }
  double total_mass = 0.0, mean = 0.0;
  for (std::size_t i = 0; i < X.values.size(); ++i) {
    if (!(X.values[i] >= 0.0) || !(X.masses[i] >= 0.0)) {
      throw DomainError("random variable values and masses must be nonnegative");
    }
    total_mass += X.masses[i];
    mean += X.masses[i] * X.values[i];
  }
  if (std::abs(total_mass - 1.0) > 1e-12) throw DomainError("masses must sum to 1");
  if (mean < 1.0 - 1e-12) throw DomainError("random variable needs mean >= 1");
  const double d = n.real();
  double e = 0.0;
  for (std::size_t i = 0; i < X.values.size(); ++i) {
    e += X.masses[i] *
         std::pow(alpha * alpha + (d - 1.0) * std::pow(X.values[i], 2.0 / (d - 1.0)), 0.5 * d);
  }
  return e;
}

double random_variable_energy(double alpha, Dimension n, const TwoPointVariable& X) {
  return random_variable_energy(alpha, n, X.as_discrete());
}

double two_point_energy(double alpha, Dimension n) {
  const double an = alpha_n(n);
  if (!std::isfinite(an)) throw DomainError("two-point energy needs n >= 4");
  const double d = n.real();
  const double b = d * std::pow(an * an + d - 1.0, 0.5 * (d - 2.0)) / an;
  return std::pow(alpha, d) + b * alpha;
}

}  // namespace nharm
