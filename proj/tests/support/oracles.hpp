#pragma once

// Reference computations used as independent oracles. They are deliberately
// naive (plain bisection, composite Simpson) so that they share no code with
// the library's TOMS 748 and Gauss-Kronrod paths.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

template <class F>
double bisect(F f, double lo, double hi, int iters = 200) {
  double flo = f(lo);
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

template <class F>
double simpson(F f, double a, double b, int panels = 20000) {
  if (panels % 2) ++panels;
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

inline std::vector<double> log_grid(double lo, double hi, int count) {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
  }
  return out;
}

inline double rel(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

// Closed forms for n = 2.
inline double h2_plus(double t) { return 0.5 * (t + 1.0 / t); }
inline double h2_minus(double t) { return 0.5 * (t - 1.0 / t); }

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

}  // namespace oracle
