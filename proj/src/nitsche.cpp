#include "nharmonic/nitsche.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "detail/numerics.hpp"
#include "nharmonic/errors.hpp"
#include "nharmonic/principal.hpp"

namespace nharm {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kConformalBand = 1e-12;
constexpr double kBoundBand = 1e-10;

NitscheConstants compute_constants(Dimension n) {
  NitscheConstants c;
  if (n.value() <= 3) {
    c.alpha_n = kInf;
    c.gamma_n = 1.0;
    return c;
  }
  const double d = n.real();
  // (a^2+n-1)^{(n-2)/2} (a^2-1) / a^n - 1 runs from -1 at a = 1 to a positive
  // value at sqrt((n-1)/(n-3)).
  auto f = [d](double a) {
    return std::pow(a * a + d - 1.0, 0.5 * (d - 2.0)) * (a * a - 1.0) / std::pow(a, d) - 1.0;
  };
  const double upper = std::sqrt((d - 1.0) / (d - 3.0));
  c.alpha_n = detail::bracketed_root(f, 1.0, upper, std::numeric_limits<double>::digits - 1,
                                     "alpha_n");
  c.gamma_n = gamma_minus(1.0 / c.alpha_n, n);
  c.delta_n = gamma_minus(std::sqrt((d - 3.0) / (d - 1.0)), n);
  return c;
}

}  // namespace

const NitscheConstants& nitsche_constants(Dimension n) {
  static std::shared_mutex mutex;
  static std::map<int, NitscheConstants> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(n.value()); it != cache.end()) return it->second;
  }
  NitscheConstants fresh = compute_constants(n);
  std::unique_lock lock(mutex);
  return cache.try_emplace(n.value(), fresh).first->second;
}

double alpha_n(Dimension n) { return nitsche_constants(n).alpha_n; }
double gamma_n(Dimension n) { return nitsche_constants(n).gamma_n; }

double delta_n(Dimension n) {
  const auto& c = nitsche_constants(n);
  if (!c.delta_n) throw DomainError("delta_n is defined for n >= 4 only");
  return *c.delta_n;
}

Modulus lower_nitsche(const Modulus& m, Dimension n) {
  if (!(m.log_ratio >= 0.0)) throw DomainError("modulus must be nonnegative");
  if (m.log_ratio == 0.0) return {0.0, 0.0};
  return Modulus::from_log_ratio(log_h_plus_at_log(m.log_ratio, n), n);
}

Modulus upper_nitsche(const Modulus& m, Dimension n) {
  if (!(m.log_ratio >= 0.0)) throw DomainError("modulus must be nonnegative");
  if (n.value() <= 3) return {kInf, kInf};
  if (m.log_ratio == 0.0) return {0.0, 0.0};
  const double lg = std::log(gamma_n(n));
  return Modulus::from_log_ratio(
      log_abs_h_minus_at_log(lg + m.log_ratio, n) - log_abs_h_minus_at_log(lg, n), n);
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Conformal: return "conformal";
    case Regime::ContractingWithin: return "contracting_within";
    case Regime::ContractingBelow: return "contracting_below";
    case Regime::ExpandingWithin: return "expanding_within";
    case Regime::ExpandingAbove: return "expanding_above";
  }
  return "unknown";
}

PairClassification classify(const Annulus& source, const Annulus& target, Dimension n) {
  PairClassification pc;
  pc.mod_source = modulus(source, n);
  pc.mod_target = modulus(target, n);
  pc.alpha_ratio = pc.mod_target.log_ratio / pc.mod_source.log_ratio;
  pc.lower_bound = lower_nitsche(pc.mod_source, n);
  pc.upper_bound = upper_nitsche(pc.mod_source, n);

  const double ms = pc.mod_source.log_ratio;
  const double mt = pc.mod_target.log_ratio;
  if (std::abs(mt - ms) <= kConformalBand * ms) {
    pc.regime = Regime::Conformal;
  } else if (mt < ms) {
    pc.regime = mt >= pc.lower_bound.log_ratio * (1.0 - kBoundBand) ? Regime::ContractingWithin
                                                                      : Regime::ContractingBelow;
  } else {
    pc.regime = mt <= pc.upper_bound.log_ratio * (1.0 + kBoundBand) ? Regime::ExpandingWithin
                                                                      : Regime::ExpandingAbove;
  }
  return pc;
}

}  // namespace nharm
