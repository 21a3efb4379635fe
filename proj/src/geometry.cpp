#include "nharmonic/geometry.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "nharmonic/errors.hpp"

namespace nharm {

Dimension::Dimension(int n) : n_(n) {
  if (n < 2) {
    throw DomainError("dimension must be at least 2, got " + std::to_string(n));
  }
}

Annulus::Annulus(double inner, double outer) : inner_(inner), outer_(outer) {
  if (!std::isfinite(inner) || !std::isfinite(outer) || !(inner > 0.0)) {
    throw DomainError("annulus radii must be positive and finite");
  }
  if (!(inner < outer)) {
    throw DomainError("degenerate annulus: inner radius must be below outer radius");
  }
}

double Annulus::log_ratio() const noexcept { return std::log(outer_ / inner_); }

Modulus Modulus::from_log_ratio(double log_ratio, Dimension n) {
  return {sphere_area(n) * log_ratio, log_ratio};
}

Modulus Modulus::from_value(double value, Dimension n) {
  return {value, value / sphere_area(n)};
}

double sphere_area(Dimension n) {
  // Even n = 2k: 2 pi^k / (k-1)!.  Odd n = 2k+1: 2^{k+1} pi^k / (1*3*...*(2k-1)).
  const int dim = n.value();
  const int k = dim / 2;
  const double pik = std::pow(std::numbers::pi, k);
  if (dim % 2 == 0) {
    double factorial = 1.0;
    for (int j = 2; j <= k - 1; ++j) factorial *= j;
    return 2.0 * pik / factorial;
  }
  double odd_product = 1.0;
  for (int j = 1; j <= 2 * k - 1; j += 2) odd_product *= j;
  return std::pow(2.0, k + 1) * pik / odd_product;
}

Modulus modulus(const Annulus& a, Dimension n) {
  return Modulus::from_log_ratio(a.log_ratio(), n);
}

double volume(const Annulus& a, Dimension n) {
  const double d = n.real();
  return sphere_area(n) * (std::pow(a.outer(), d) - std::pow(a.inner(), d)) / d;
}

}  // namespace nharm
