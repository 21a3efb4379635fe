#include "nharmonic/profile.hpp"

#include <cmath>

// Boost 1.74's pchip calls an unqualified isnan, which plain double cannot
// find by argument-dependent lookup.
namespace boost::math::interpolators {
using std::isnan;
}

#include <boost/math/interpolators/pchip.hpp>

#include <algorithm>
#include <cmath>
#include <memory>
#include <utility>

#include "nharmonic/errors.hpp"

namespace nharm {

StrainProfile::StrainProfile(Annulus domain, Sampler sampler, std::vector<double> breakpoints)
    : domain_(domain), sampler_(std::move(sampler)) {
  for (double t : breakpoints) {
    if (t > domain_.inner() && t < domain_.outer()) breakpoints_.push_back(t);
  }
  std::sort(breakpoints_.begin(), breakpoints_.end());
  breakpoints_.erase(std::unique(breakpoints_.begin(), breakpoints_.end()), breakpoints_.end());
}

std::vector<double> StrainProfile::log_nodes() const {
  std::vector<double> nodes{std::log(domain_.inner())};
  for (double t : breakpoints_) nodes.push_back(std::log(t));
  nodes.push_back(std::log(domain_.outer()));
  return nodes;
}

StrainProfile to_profile(const RadialMap& map, Dimension n) {
  std::vector<double> breaks;
  if (map.hammered()) breaks.push_back(map.domain.inner());
  return StrainProfile(map.full_domain(), [map, n](double t) { return map.sample(t, n); },
                       std::move(breaks));
}

StrainProfile power_stretching(const Annulus& source, const Annulus& target) {
  const double a = target.log_ratio() / source.log_ratio();
  const double r = source.inner();
  const double rs = target.inner();
  return StrainProfile(source, [a, r, rs](double t) {
    const double H = rs * std::pow(t / r, a);
    return StrainSample{t, H, a * H / t, a, 1.0 - a * a};
  });
}

StrainProfile monotone_cubic(std::vector<double> t, std::vector<double> H) {
  if (t.size() != H.size() || t.size() < 4) {
    throw DomainError("monotone cubic profile needs at least four (t, H) knots");
  }
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1])) throw DomainError("profile knots must be strictly increasing in t");
  }
  const Annulus domain(t.front(), t.back());
  std::vector<double> knots = t;
  using Pchip = boost::math::interpolators::pchip<std::vector<double>>;
  auto spline = std::make_shared<Pchip>(std::move(t), std::move(H));
  return StrainProfile(
      domain,
      [spline](double x) { return StrainSample::from_derivative(x, (*spline)(x), spline->prime(x)); },
      std::move(knots));
}

}  // namespace nharm
