#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "nharmonic/errors.hpp"
#include "nharmonic/nitsche.hpp"
#include "nharmonic/principal.hpp"
#include "oracles.hpp"

using namespace nharm;
using std::numbers::pi;

namespace {

double alpha_equation(double a, int n) {
  return std::pow(a * a + n - 1.0, 0.5 * (n - 2.0)) * (a * a - 1.0) - std::pow(a, n);
}

double alpha_oracle(int n) {
  return oracle::bisect([n](double a) { return alpha_equation(a, n); }, 1.0,
                        std::sqrt((n - 1.0) / (n - 3.0)));
}

}  // namespace

TEST_CASE("alpha_n") {
  CHECK(std::isinf(alpha_n(Dimension(2))));
  CHECK(std::isinf(alpha_n(Dimension(3))));
  CHECK(std::abs(alpha_n(Dimension(4)) - std::sqrt(1.5)) < 1e-10);
  CHECK(std::abs(alpha_oracle(4) - std::sqrt(1.5)) < 1e-10);
  for (int n = 4; n <= 10; ++n) {
    const double a = alpha_n(Dimension(n));
    CAPTURE(n);
    CHECK(a > 1.0);
    CHECK(a < std::sqrt((n - 1.0) / (n - 3.0)));
    CHECK(std::abs(alpha_equation(a, n)) < 1e-10);
    CHECK(std::abs(a - alpha_oracle(n)) < 1e-10);
  }
}

TEST_CASE("gamma_n") {
  CHECK(gamma_n(Dimension(2)) == 1.0);
  CHECK(gamma_n(Dimension(3)) == 1.0);
  CHECK(gamma_n(Dimension(4)) == doctest::Approx(gamma_minus(std::sqrt(2.0 / 3.0), Dimension(4))).epsilon(1e-14));
  for (int n = 4; n <= 10; ++n) CHECK(gamma_n(Dimension(n)) > 1.0);
}

TEST_CASE("delta_n") {
  // With s = 1/sqrt(3): (1+s)/(1-s) = 2 + sqrt(3), and the exponential factor is e^{pi/(8 sqrt 3)}.
  const double closed = std::pow(2.0 + std::sqrt(3.0), 0.25) * std::exp(pi / (8.0 * std::sqrt(3.0)));
  CHECK(delta_n(Dimension(4)) == doctest::Approx(closed).epsilon(1e-13));
  for (int n = 4; n <= 10; ++n) {
    const Dimension d(n);
    // delta_n is where the elasticity of H_- drops to sqrt((n-1)/(n-3)).
    CHECK(oracle::rel(elasticity(PrincipalKind::Minus, delta_n(d), d), std::sqrt((n - 1.0) / (n - 3.0))) < 1e-12);
    CHECK(delta_n(d) > 1.0);
  }
  CHECK_THROWS_AS(delta_n(Dimension(3)), DomainError);
  CHECK_FALSE(nitsche_constants(Dimension(3)).delta_n.has_value());
}

TEST_CASE("lower Nitsche function") {
  CHECK(lower_nitsche(Modulus{}, Dimension(3)).value == 0.0);
  for (double L : oracle::log_grid(1e-3, 10, 60)) {
    const Modulus m = Modulus::from_log_ratio(L, Dimension(2));
    CHECK(std::abs(lower_nitsche(m, Dimension(2)).value - 2 * pi * std::log(std::cosh(L))) < 1e-9);
  }
  for (int n = 2; n <= 8; ++n) {
    const Dimension d(n);
    const double w = sphere_area(d);
    double prev = 0.0;
    for (int i = 1; i <= 100; ++i) {
      const double t = 10.0 * w * i / 100.0;
      const double low = lower_nitsche(Modulus::from_value(t, d), d).value;
      CHECK(low > 0.0);
      CHECK(low < t);
      CHECK(low > prev);
      prev = low;
    }
  }
}

TEST_CASE("upper Nitsche function") {
  for (int n : {2, 3}) {
    CHECK(std::isinf(upper_nitsche(Modulus::from_log_ratio(0.5, Dimension(n)), Dimension(n)).value));
  }
  for (int n = 4; n <= 8; ++n) {
    const Dimension d(n);
    const double w = sphere_area(d);
    double prev = 0.0;
    for (int i = 1; i <= 100; ++i) {
      const double t = 10.0 * w * i / 100.0;
      const double up = upper_nitsche(Modulus::from_value(t, d), d).value;
      CHECK(up > t);
      CHECK(std::isfinite(up));
      CHECK(up > prev);
      prev = up;
    }
    CHECK(upper_nitsche(Modulus::from_log_ratio(1e-12, d), d).value < 1e-9);
  }
}

TEST_CASE("classification") {
  const Dimension two(2), four(4);
  CHECK(classify(Annulus(1, 2), Annulus(3, 6), four).regime == Regime::Conformal);
  CHECK(classify(Annulus(1, 2), Annulus(1, 1.25), two).regime == Regime::ContractingWithin);
  CHECK(classify(Annulus(1, 2), Annulus(1, 1.3), two).regime == Regime::ContractingWithin);
  CHECK(classify(Annulus(1, 2), Annulus(1, 1.2), two).regime == Regime::ContractingBelow);
  CHECK(classify(Annulus(1, 2), Annulus(1, 100), two).regime == Regime::ExpandingWithin);

  const Annulus source(1, 2);
  const Modulus ms = modulus(source, four);
  const double up = upper_nitsche(ms, four).log_ratio;
  CHECK(classify(source, Annulus(1, std::exp(up * (1 - 1e-6))), four).regime == Regime::ExpandingWithin);
  CHECK(classify(source, Annulus(1, std::exp(up * (1 + 1e-6))), four).regime == Regime::ExpandingAbove);
  const double low = lower_nitsche(ms, four).log_ratio;
  CHECK(classify(source, Annulus(1, std::exp(low * (1 + 1e-6))), four).regime == Regime::ContractingWithin);
  CHECK(classify(source, Annulus(1, std::exp(low * (1 - 1e-6))), four).regime == Regime::ContractingBelow);

  const PairClassification pc = classify(Annulus(1, 2), Annulus(1, 4), Dimension(3));
  CHECK(pc.alpha_ratio == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::isinf(pc.upper_bound.value));
}

TEST_CASE("regime names") {
  CHECK(to_string(Regime::ContractingWithin) == "contracting_within");
  CHECK(to_string(Regime::ExpandingAbove) == "expanding_above");
}
