// Acceptance suite: one PASS/FAIL line per criterion, with the worst
// observed error next to the tolerance it is held to.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "nharmonic/bvp.hpp"
#include "nharmonic/energy.hpp"
#include "nharmonic/lagrangian.hpp"
#include "nharmonic/minimizer.hpp"
#include "nharmonic/nitsche.hpp"
#include "nharmonic/principal.hpp"
#include "nharmonic/profile.hpp"
#include "oracles.hpp"

using namespace nharm;
using std::numbers::pi;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

// Tracks the largest observed error against a fixed tolerance.
struct Worst {
  double tol;
  double value = 0.0;
  void see(double e) { value = std::max(value, std::isnan(e) ? INFINITY : e); }
  bool ok() const { return value < tol; }
  std::string str(const char* what) const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s %.3g (tol %.0e)", what, value, tol);
    return buf;
  }
};

Verdict closed_forms_planar() {
  const auto start = std::chrono::steady_clock::now();
  Worst w{1e-10};
  const Dimension two(2);
  for (double t : oracle::log_grid(0.1, 10, 1000)) {
    w.see(std::abs(h_plus(t, two).H - oracle::h2_plus(t)));
    w.see(std::abs(h_minus(t, two).H - oracle::h2_minus(t)));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, ", %.3f s (limit 1 s)", secs);
  return {w.ok() && secs < 1.0, w.str("max |H - (t +- 1/t)/2|") + buf};
}

Verdict characteristic_residuals() {
  Worst w{1e-9};
  for (int n = 2; n <= 8; ++n) {
    const Dimension d(n);
    for (double t : oracle::log_grid(1e-2, 1e2, 401)) {
      w.see(std::abs(characteristic(h_plus(t, d), d) - 1.0));
      w.see(std::abs(characteristic(h_minus(t, d), d) + 1.0));
    }
  }
  return {w.ok(), w.str("max |L H -+ 1| over n = 2..8")};
}

Verdict symmetry_suite() {
  Worst h{1e-10}, g{1e-12};
  for (int n = 2; n <= 8; ++n) {
    const Dimension d(n);
    for (double t : oracle::log_grid(1e-2, 1e2, 201)) {
      h.see(std::abs(h_plus(1 / t, d).H - h_plus(t, d).H));
      h.see(std::abs(h_minus(1 / t, d).H + h_minus(t, d).H));
    }
    for (double s = -0.999; s <= 0.999; s += 0.001) {
      g.see(std::abs(gamma_plus(s, d) * gamma_plus(-s, d) - 1.0));
      g.see(std::abs(gamma_minus(s, d) * gamma_minus(-s, d) - 1.0));
    }
  }
  return {h.ok() && g.ok(), h.str("max |H(1/t) -+ H(t)|") + ", " + g.str("max |Gamma(s)Gamma(-s) - 1|")};
}

Verdict alpha_n_checks() {
  auto equation = [](double a, int n) {
    return std::pow(a * a + n - 1.0, 0.5 * (n - 2.0)) * (a * a - 1.0) - std::pow(a, n);
  };
  Worst w{1e-10};
  w.see(std::abs(alpha_n(Dimension(4)) - std::sqrt(1.5)));
  const double bisected = oracle::bisect([&](double a) { return equation(a, 4); }, 1.0, std::sqrt(3.0));
  w.see(std::abs(bisected - std::sqrt(1.5)));
  bool sandwich = true;
  for (int n = 4; n <= 10; ++n) {
    const double a = alpha_n(Dimension(n));
    sandwich = sandwich && a > 1.0 && a < std::sqrt((n - 1.0) / (n - 3.0));
  }
  return {w.ok() && sandwich,
          w.str("|alpha_4 - sqrt(3/2)| and bisection") + (sandwich ? ", sandwich holds n = 4..10" : ", sandwich violated")};
}

Verdict nitsche_sandwich() {
  bool ok = true;
  for (int n = 2; n <= 8; ++n) {
    const Dimension d(n);
    for (int i = 1; i <= 100; ++i) {
      const double t = 10.0 * sphere_area(d) * i / 100.0;
      const Modulus m = Modulus::from_value(t, d);
      const double low = lower_nitsche(m, d).value;
      ok = ok && low > 0.0 && low < t;
      if (n >= 4) ok = ok && upper_nitsche(m, d).value > t;
    }
  }
  Worst w{1e-9};
  for (int i = 1; i <= 100; ++i) {
    const double t = 20.0 * pi * i / 100.0;
    w.see(std::abs(lower_nitsche(Modulus::from_value(t, Dimension(2)), Dimension(2)).value -
                   2 * pi * std::log(std::cosh(t / (2 * pi)))));
  }
  return {ok && w.ok(), std::string(ok ? "sandwich holds" : "sandwich violated") + ", " +
                            w.str("n = 2 lower function error")};
}

Verdict planar_energies() {
  auto g = oracle::rng(61);
  const Dimension two(2);
  Worst within{1e-8}, below{1e-10};
  int n_within = 0, n_below = 0;
  while (n_within < 50 || n_below < 50) {
    const double r = oracle::uniform(g, 0.3, 3), R = r * oracle::uniform(g, 1.2, 5);
    const double rs = oracle::uniform(g, 0.3, 3), Rs = rs * oracle::uniform(g, 1.02, 8);
    const Annulus s(r, R), t(rs, Rs);
    const Regime regime = classify(s, t, two).regime;
    if (regime == Regime::Conformal) continue;
    const PlanarMinimizer pm = planar_minimal_energy(s, t);
    if (regime == Regime::ContractingBelow) {
      if (n_below >= 50) continue;
      ++n_below;
      // Rescale the source so that R = R* + sqrt(R*^2 - r*^2).
      const double scale = (Rs + std::sqrt(Rs * Rs - rs * rs)) / R;
      const double expected =
          2 * pi * Rs * std::sqrt(Rs * Rs - rs * rs) + 2 * pi * rs * rs * std::log(rs / (scale * r));
      below.see(oracle::rel(pm.energy.value, expected));
    } else {
      if (n_within >= 50) continue;
      ++n_within;
      const double q = evaluate_energy(pm.map, two, Functional::ConformalE, "quadrature").value;
      within.see(oracle::rel(pm.energy.value, q));
    }
  }
  return {within.ok() && below.ok(),
          within.str("within-bound closed form vs quadrature") + ", " + below.str("below-bound composite")};
}

Verdict power_stretching_f() {
  auto g = oracle::rng(71);
  Worst w{1e-9};
  for (int n = 2; n <= 6; ++n) {
    const Dimension d(n);
    for (int i = 0; i < 20; ++i) {
      const double r = oracle::uniform(g, 0.2, 4), R = r * oracle::uniform(g, 1.05, 10);
      const double rs = oracle::uniform(g, 0.2, 4), Rs = rs * oracle::uniform(g, 1.05, 10);
      const Annulus s(r, R), t(rs, Rs);
      const double alpha = t.log_ratio() / s.log_ratio();
      const double expected = std::pow(alpha * alpha + n - 1.0, 0.5 * n) * modulus(s, d).value;
      w.see(oracle::rel(profile_energy(power_stretching(s, t), d, Functional::WeightedF).value, expected));
    }
  }
  return {w.ok(), w.str("max relative error")};
}

Verdict bvp_round_trip() {
  auto g = oracle::rng(81);
  Worst w{1e-8};
  const PrincipalKind kinds[] = {PrincipalKind::Plus, PrincipalKind::Minus};
  int done = 0;
  while (done < 500) {
    const Dimension n(2 + done % 7);
    const PrincipalKind kind = kinds[done % 2];
    const double lambda = oracle::uniform(g, 0.1, 10.0) * (oracle::uniform(g, 0, 1) < 0.2 ? -1.0 : 1.0);
    const double k = std::exp(oracle::uniform(g, -2.0, 2.0));
    const double a = std::exp(oracle::uniform(g, -1.2, 1.2)) / k;
    const double b = a * std::exp(oracle::uniform(g, 0.05, 2.0));
    const double alpha = lambda * principal_sample(kind, k * a, n).H;
    const double beta = lambda * principal_sample(kind, k * b, n).H;
    if (beta == 0.0) continue;
    ++done;
    const BvpSolution s = solve_radial_bvp({a, b, alpha, beta}, n);
    if (s.map.kind != kind) {
      w.see(INFINITY);
      continue;
    }
    w.see(oracle::rel(s.map.lambda, lambda));
    w.see(oracle::rel(s.map.k, k));
  }
  return {w.ok(), w.str("max relative error in (lambda, k) over 500 trials")};
}

Verdict free_lagrangians() {
  auto g = oracle::rng(91);
  Worst w{1e-8};
  int done = 0;
  int seen[5] = {};
  while (done < 100) {
    const Dimension n(2 + done % 4);
    const double r = oracle::uniform(g, 0.5, 2), R = r * oracle::uniform(g, 1.2, 3);
    const double rs = oracle::uniform(g, 0.5, 2), Rs = rs * oracle::uniform(g, 1.05, 4);
    const Annulus s(r, R), t(rs, Rs);
    const Regime regime = classify(s, t, n).regime;
    if (regime == Regime::ContractingBelow) continue;
    ++done;
    ++seen[static_cast<int>(regime)];
    const FreeLagrangianReport rep = verify_free_lagrangians(fit_annuli(s, t, n).map, s, t, n);
    w.see(rep.residual.jacobian);
    w.see(rep.residual.target_modulus);
    w.see(rep.residual.source_modulus);
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, " [contracting %d, expanding %d, expanding-above %d]", seen[1], seen[3], seen[4]);
  return {w.ok(), w.str("max residual over 100 maps") + buf};
}

Verdict coefficient_inequality() {
  auto g = oracle::rng(101);
  Worst eq{1e-10};
  double worst_gap = 0.0;
  for (CoefficientBranch branch : {CoefficientBranch::Expanding, CoefficientBranch::Contracting}) {
    for (int i = 0; i < 10000; ++i) {
      const Dimension d(2 + i % 7);
      const double top = std::isinf(alpha_n(d)) ? 4.0 : alpha_n(d);
      const double alpha = branch == CoefficientBranch::Expanding ? oracle::uniform(g, 1.0, top)
                                                                  : oracle::uniform(g, 0.0, 1.0);
      const CoefficientPair p = coefficient_pair(alpha, d, branch);
      const double X = oracle::uniform(g, 0, 5), Y = oracle::uniform(g, 0.01, 5);
      const double scale = std::pow(X * X + (d.real() - 1) * Y * Y, 0.5 * d.real());
      worst_gap = std::min(worst_gap, coefficient_gap(p, X, Y, d) / scale);
      const double scale_eq = std::pow(Y, d.real()) * std::pow(alpha * alpha + d.real() - 1, 0.5 * d.real());
      eq.see(std::abs(coefficient_gap(p, alpha * Y, Y, d)) / std::max(1.0, scale_eq));
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "most negative relative gap %.3g (must be >= -1e-12), ", worst_gap);
  return {worst_gap >= -1e-12 && eq.ok(), buf + eq.str("equality residual at X = alpha Y")};
}

Verdict spherical_homothety() {
  Worst w{1e-8};
  for (int n = 2; n <= 6; ++n) {
    for (double lambda : {0.1, 0.5, 2.0, 10.0}) {
      w.see(std::abs(homothety_jacobian_mean(lambda, Dimension(n)) - 1.0));
    }
  }
  const double gap = 49.0 - sphere_energy_T(2.0, 1.1, Dimension(4));
  char buf[80];
  std::snprintf(buf, sizeof buf, ", gap at (n=4, alpha=2, lambda=1.1) = %.6g", gap);
  return {w.ok() && gap > 0.0, w.str("max |mean Jacobian - 1|") + buf};
}

Verdict minimality() {
  auto g = oracle::rng(111);
  const Annulus source(1, 2);
  double margin = INFINITY;
  int competitors = 0;
  for (int n = 2; n <= 4; ++n) {
    const Dimension d(n);
    const double up = upper_nitsche(modulus(source, d), d).log_ratio;
    const double Rs_expanding = std::isinf(up) ? 3.0 : std::exp(0.5 * (source.log_ratio() + up));
    for (double Rs : {1.8, Rs_expanding}) {
      const Annulus target(1, Rs);
      const MinimizerPlan plan = minimal_energy(source, target, d);
      const Regime regime = plan.classification.regime;
      if (regime != Regime::ContractingWithin && regime != Regime::ExpandingWithin) {
        return {false, "test pair fell outside the within-bound regimes"};
      }
      for (int i = 0; i < 200; ++i) {
        const int knots = 4 + i % 5;
        std::vector<double> t{1.0}, H{1.0}, inner;
        for (int j = 0; j < knots; ++j) inner.push_back(oracle::uniform(g, 1.0, Rs));
        std::sort(inner.begin(), inner.end());
        std::vector<double> ts;
        for (int j = 0; j < knots; ++j) ts.push_back(oracle::uniform(g, 1.0, 2.0));
        std::sort(ts.begin(), ts.end());
        for (int j = 0; j < knots; ++j) {
          if (ts[j] <= t.back() + 1e-6 || ts[j] >= 2.0 - 1e-6) continue;
          t.push_back(ts[j]);
          H.push_back(std::max(inner[j], H.back()));
        }
        t.push_back(2.0);
        H.push_back(Rs);
        if (t.size() < 4) continue;
        ++competitors;
        const double e = profile_energy(monotone_cubic(t, H), d, Functional::ConformalE).value;
        margin = std::min(margin, e - plan.energy.value);
      }
    }
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "min(competitor - minimizer) = %.6g over %d competitors (must be >= -1e-9)", margin,
                competitors);
  return {margin >= -1e-9 && competitors >= 1000, buf};
}

Verdict distortion_identities() {
  Worst w{1e-8};
  for (int n = 2; n <= 5; ++n) {
    const Dimension d(n);
    for (double Rs : {1.7, 1.9, 3.0, 6.0}) {
      const DistortionCheck pw = distortion_integral_check(power_stretching(Annulus(1, 2), Annulus(1, Rs)), d);
      w.see(pw.residual_e / pw.energy_e);
      w.see(pw.residual_f / pw.energy_f);
    }
    for (double Rs : {1.7, 1.8, 1.9}) {
      const Annulus s(1, 2), t(1, Rs);
      if (classify(s, t, d).regime != Regime::ContractingWithin) continue;
      const DistortionCheck pc = distortion_integral_check(fit_annuli(s, t, d).map, d);
      w.see(pc.residual_e / pc.energy_e);
      w.see(pc.residual_f / pc.energy_f);
    }
  }
  return {w.ok(), w.str("max relative residual")};
}

Verdict qc_bounds_tight() {
  auto g = oracle::rng(121);
  Worst w{1e-12};
  for (int n = 2; n <= 8; ++n) {
    const Dimension d(n);
    for (int i = 0; i < 50; ++i) {
      const double r = oracle::uniform(g, 0.2, 3), R = r * oracle::uniform(g, 1.1, 5);
      const Annulus s(r, R);
      const double alpha = oracle::uniform(g, 1.0, 4.0);
      const double rs = oracle::uniform(g, 0.2, 3);
      const Annulus t(rs, rs * std::exp(alpha * s.log_ratio()));
      const double a = t.log_ratio() / s.log_ratio();
      const Dilatations k = power_stretching_dilatations(a, d);
      const QcCheck q = qc_bounds(s, t, d, k.outer, k.inner);
      w.see(std::abs(q.ratio_power - k.outer) / k.outer);
      if (!q.upper_holds && std::abs(q.upper_margin) > 1e-12 * k.outer) w.see(INFINITY);
    }
  }
  return {w.ok(), w.str("max |(Mod*/Mod)^{n-1} - K_O| / K_O")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"n = 2 closed forms", closed_forms_planar},
      {"characteristic residuals", characteristic_residuals},
      {"symmetry suite", symmetry_suite},
      {"alpha_n", alpha_n_checks},
      {"Nitsche sandwich", nitsche_sandwich},
      {"planar energies", planar_energies},
      {"weighted energy of power stretchings", power_stretching_f},
      {"BVP round trip", bvp_round_trip},
      {"free-Lagrangian identities", free_lagrangians},
      {"coefficient inequality", coefficient_inequality},
      {"spherical homothety", spherical_homothety},
      {"minimality against competitors", minimality},
      {"distortion identities", distortion_identities},
      {"quasiconformal bounds", qc_bounds_tight},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::printf("AC%02zu %s  %s: %s\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first, v.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
