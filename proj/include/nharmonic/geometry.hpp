#pragma once

#include <numbers>

namespace nharm {

/// Ambient dimension n >= 2 of the Euclidean space the annuli live in.
class Dimension {
 public:
  explicit Dimension(int n);

  int value() const noexcept { return n_; }
  double real() const noexcept { return static_cast<double>(n_); }

  friend bool operator==(Dimension, Dimension) = default;

 private:
  int n_;
};

/// Spherical ring {x : inner < |x| < outer}.
class Annulus {
 public:
  Annulus(double inner, double outer);

  double inner() const noexcept { return inner_; }
  double outer() const noexcept { return outer_; }
  double log_ratio() const noexcept;

  friend bool operator==(const Annulus&, const Annulus&) = default;

 private:
  double inner_;
  double outer_;
};

/// Conformal modulus. `value` carries the sphere-area factor; `log_ratio`
/// is log(R/r). Either may be +inf for the upper Nitsche function.
struct Modulus {
  double value = 0.0;
  double log_ratio = 0.0;

  static Modulus from_log_ratio(double log_ratio, Dimension n);
  static Modulus from_value(double value, Dimension n);
};

/// Surface area of the unit sphere S^{n-1}.
double sphere_area(Dimension n);

Modulus modulus(const Annulus& a, Dimension n);

/// Euclidean n-volume of the annulus.
double volume(const Annulus& a, Dimension n);

}  // namespace nharm
