#pragma once

// Thin wrappers over Boost.Math root finding and quadrature that translate
// Boost's failure modes into NumericalError.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <utility>

#include "nharmonic/errors.hpp"
#include "nharmonic/quadrature.hpp"

namespace nharm::detail {

// One G7/K15 panel. Boost 1.74 reports the panel error in [-1, 1] units, so it
// is rescaled here by the half-width.
template <class F>
QuadratureResult kronrod_panel(F& f, double a, double b, double* l1) {
  double error = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 0, 0.0, &error, l1);
  return {value, error * 0.5 * std::abs(b - a)};
}

/// Globally adaptive G7/K15 on [a, b]: the panel with the largest error is
/// bisected until the summed error drops below max(atol, rtol * L1).
template <class F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureOptions& opt) {
  if (a == b) return {0.0, 0.0};
  struct Panel {
    double a, b, value, error, l1;
    bool operator<(const Panel& o) const { return error < o.error; }
  };
  auto make = [&](double lo, double hi) {
    double l1 = 0.0;
    const QuadratureResult r = kronrod_panel(f, lo, hi, &l1);
    return Panel{lo, hi, r.value, r.error, l1};
  };

  std::priority_queue<Panel> open;
  double value = 0.0, error = 0.0, l1 = 0.0;
  double settled_error = 0.0;  // panels too narrow to split further
  const Panel first = make(a, b);
  open.push(first);
  value = first.value;
  error = first.error;
  l1 = first.l1;

  const std::size_t max_panels = std::size_t{1} << std::min(opt.max_depth, 20u);
  while (!open.empty()) {
    if (error <= std::max(opt.atol, opt.rtol * l1)) break;
    if (open.size() >= max_panels) break;
    const Panel worst = open.top();
    open.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) {
      settled_error += worst.error;
      continue;
    }
    const Panel left = make(worst.a, mid);
    const Panel right = make(mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    open.push(left);
    open.push(right);
  }
  // Re-sum to shed the rounding accumulated by the running updates.
  value = 0.0;
  error = settled_error;
  for (; !open.empty(); open.pop()) {
    value += open.top().value;
    error += open.top().error;
  }
  if (!std::isfinite(value)) {
    throw NumericalError("quadrature produced a non-finite value", error);
  }
  if (error > std::max(opt.atol, opt.rtol * l1)) {
    throw NumericalError("quadrature did not converge", error);
  }
  return {value, error};
}

/// Root of a continuous function with f(lo) and f(hi) of opposite signs.
/// Returns the midpoint of the final TOMS 748 bracket.
template <class F>
double bracketed_root(F&& f, double lo, double hi, double flo, double fhi,
                      int bits = std::numeric_limits<double>::digits - 2,
                      const char* what = "root") {
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw NumericalError(std::string(what) + ": bracket does not straddle a sign change",
                         std::min(std::abs(flo), std::abs(fhi)));
  }
  std::uintmax_t iters = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(bits), iters);
  if (iters >= 200) {
    throw NumericalError(std::string(what) + ": no convergence", std::abs(b - a));
  }
  return 0.5 * (a + b);
}

template <class F>
double bracketed_root(F&& f, double lo, double hi,
                      int bits = std::numeric_limits<double>::digits - 2,
                      const char* what = "root") {
  return bracketed_root(f, lo, hi, f(lo), f(hi), bits, what);
}

/// Stable log(cosh(x)).
inline double log_cosh(double x) {
  const double ax = std::abs(x);
  return ax + std::log1p(std::exp(-2.0 * ax)) - std::numbers::ln2;
}

}  // namespace nharm::detail
