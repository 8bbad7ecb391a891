#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oracles.hpp"
#include "spectral/specfun.hpp"

using namespace spectral::specfun;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;
}  // namespace

TEST_SUITE_BEGIN("specfun");

TEST_CASE("gamma: pinned values") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(0.5) == doctest::Approx(kSqrtPi).epsilon(1e-14));
  // Gamma(2.5) = (3/2)(1/2) Gamma(1/2) by the recurrence.
  CHECK(gamma_fn(2.5) == doctest::Approx(0.75 * kSqrtPi).epsilon(1e-13));
  CHECK(gamma_fn(2.5) == doctest::Approx(1.3293403881791370).epsilon(1e-10));
}

TEST_CASE("gamma: integer factorials are exact to 1e-13") {
  double factorial = 1.0;
  for (int n = 1; n <= 20; ++n) {
    CHECK(gamma_fn(n) == doctest::Approx(factorial).epsilon(1e-13));
    factorial *= n;
  }
}

TEST_CASE("gamma: matches the C library across (0, 50]") {
  for (double x = 0.03125; x <= 50.0; x += 0.03125) {
    const double ref = std::tgamma(x);
    CHECK(std::abs(gamma_fn(x) - ref) <= 1e-13 * std::abs(ref));
  }
}

TEST_CASE("gamma: domain errors") {
  CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(-1.5), std::domain_error);
}

TEST_CASE("gamma: duplication formula") {
  for (double x = 0.5; x <= 10.0; x += 0.5) {
    const double lhs = kSqrtPi * gamma_fn(2.0 * x);
    const double rhs = std::pow(2.0, 2.0 * x - 1.0) * gamma_fn(x) * gamma_fn(x + 0.5);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * gamma_fn(2.0 * x));
  }
}

TEST_CASE("double factorial: conventions and values") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(1) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(8) == 384);
  CHECK_THROWS_AS(double_factorial(-2), std::domain_error);
  CHECK_THROWS_AS(double_factorial(35), std::overflow_error);
}

TEST_CASE("bessel: values at zero and the half-integer pin") {
  CHECK(bessel_j(BesselOrder::integer(0), 0.0) == 1.0);
  CHECK(bessel_j(BesselOrder::integer(1), 0.0) == 0.0);
  CHECK(bessel_j(BesselOrder::half_integer(0), kPi / 2.0) ==
        doctest::Approx(2.0 / kPi).epsilon(1e-13));
  CHECK_THROWS_AS(bessel_j(BesselOrder::integer(0), -0.5), std::domain_error);
}

TEST_CASE("bessel: integer orders against the integral representation") {
  // Covers both sides of the series/asymptotic crossover at x = 20.
  for (int k = 0; k <= 7; ++k) {
    for (double x = 0.0; x <= 50.0; x += 0.61) {
      const double ref = static_cast<double>(oracles::bessel_integral(k, x));
      CHECK(std::abs(bessel_j(BesselOrder::integer(k), x) - ref) <= 1e-10);
    }
    CHECK(std::abs(bessel_j(BesselOrder::integer(k), 50.0) -
                   static_cast<double>(oracles::bessel_integral(k, 50.0))) <= 1e-10);
  }
}

TEST_CASE("bessel: series and closed form agree for half-integer orders on [0, 40]") {
  for (int n = 0; n <= 2; ++n) {
    CHECK(bessel_j_series(BesselOrder::half_integer(n), 0.0) ==
          bessel_j_half_closed(n, 0.0));
    for (double x = 0.5; x <= 40.0; x += 0.5) {
      const double series = bessel_j_series(BesselOrder::half_integer(n), x);
      const double closed = bessel_j_half_closed(n, x);
      CHECK(std::abs(series - closed) <= 1e-10);
    }
  }
}

TEST_CASE("bessel: d/dx (x^-nu J_nu) = -x^-nu J_{nu+1}") {
  const double h = 1e-5;
  for (int twice = 0; twice <= 4; ++twice) {
    const BesselOrder nu(twice);
    const BesselOrder nu1(twice + 2);
    const double v = nu.value();
    for (double x = 0.5; x <= 19.9; x += 0.2425) {
      const auto f = [&](double t) { return std::pow(t, -v) * bessel_j(nu, t); };
      const double diff = (f(x + h) - f(x - h)) / (2.0 * h);
      const double rhs = -std::pow(x, -v) * bessel_j(nu1, x);
      CHECK(std::abs(diff - rhs) <= 1e-6);
    }
  }
}

TEST_CASE("universal profile: closed forms at s = 0") {
  CHECK(universal_profile(1, 0.0) == doctest::Approx(1.0 / kPi).epsilon(1e-14));
  CHECK(universal_profile(2, 0.0) == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-14));
  // vol(B_1^3)/(2 pi)^3 = (4 pi / 3) / (8 pi^3).
  CHECK(universal_profile(3, 0.0) ==
        doctest::Approx((4.0 * kPi / 3.0) / std::pow(2.0 * kPi, 3)).epsilon(1e-14));
}

TEST_CASE("universal profile: m = 1 reduces to sin(r)/(pi r)") {
  for (double r = 0.25; r <= 12.0; r += 0.25) {
    CHECK(universal_profile(1, r) == doctest::Approx(std::sin(r) / (kPi * r)).epsilon(1e-12));
  }
  CHECK(std::abs(universal_profile(1, kPi)) <= 1e-16);
}

TEST_CASE("universal profile: continuity at s = 0") {
  for (int m = 1; m <= 5; ++m) {
    CHECK(std::abs(universal_profile(m, 1e-6) - universal_profile(m, 0.0)) <= 1e-8);
  }
}

TEST_CASE("universal profile: domain errors") {
  CHECK_THROWS_AS(universal_profile(0, 1.0), std::domain_error);
  CHECK_THROWS_AS(universal_profile(2, -0.1), std::domain_error);
}

TEST_SUITE_END();
