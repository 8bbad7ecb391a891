#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "spectral/euclid.hpp"
#include "spectral/specfun.hpp"

using namespace spectral::euclid;
using spectral::specfun::universal_profile;

namespace {

constexpr double kPi = std::numbers::pi;

// All multi-indices of the given dimension with |alpha| <= max_order.
std::vector<MultiIndex> all_indices(int m, int max_order) {
  std::vector<MultiIndex> out;
  std::vector<int> current(static_cast<std::size_t>(m), 0);
  const auto recurse = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == m) {
      out.push_back(MultiIndex(current));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      current[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  recurse(recurse, 0, max_order);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("euclid");

TEST_CASE("ball moments: closed values") {
  CHECK(ball_moment(1, MultiIndex({0})) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(ball_moment(1, MultiIndex({1})) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(ball_moment(2, MultiIndex({1, 0})) == doctest::Approx(kPi / 4.0).epsilon(1e-13));
  CHECK_THROWS_AS(ball_moment(2, MultiIndex({1})), std::domain_error);
  CHECK_THROWS_AS(MultiIndex({-1}), std::domain_error);
}

TEST_CASE("diagonal coefficients: pinned values and the odd-difference zero") {
  CHECK(diagonal_coefficient(1, MultiIndex({0}), MultiIndex({0})) ==
        doctest::Approx(1.0 / kPi).epsilon(1e-14));
  CHECK(diagonal_coefficient(1, MultiIndex({2}), MultiIndex({0})) ==
        doctest::Approx(-1.0 / (3.0 * kPi)).epsilon(1e-14));
  CHECK(diagonal_coefficient(1, MultiIndex({1}), MultiIndex({0})) == 0.0);
  CHECK(diagonal_coefficient(2, MultiIndex({1, 2}), MultiIndex({0, 2})) == 0.0);
  CHECK(diagonal_coefficient(3, MultiIndex({1, 0, 1}), MultiIndex({1, 1, 1})) == 0.0);
}

TEST_CASE("diagonal coefficients: equal to the ball-moment oracle") {
  for (int m = 1; m <= 3; ++m) {
    const std::vector<MultiIndex> indices = all_indices(m, 6);
    for (const MultiIndex& alpha : indices) {
      for (const MultiIndex& beta : indices) {
        if (alpha.order() + beta.order() > 6) continue;
        const double coeff = diagonal_coefficient(m, alpha, beta);
        bool even = true;
        std::vector<int> half(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
          const int s = alpha.entries[static_cast<std::size_t>(i)] +
                        beta.entries[static_cast<std::size_t>(i)];
          if (s % 2 != 0) even = false;
          half[static_cast<std::size_t>(i)] = s / 2;
        }
        if (!even) {
          CHECK(coeff == 0.0);
          continue;
        }
        // i^|a| (-i)^|b| is real here and equals (-1)^{(|a|-|b|)/2}.
        const int diff_half = (alpha.order() - beta.order()) / 2;
        const double sign = (diff_half % 2 == 0) ? 1.0 : -1.0;
        const double oracle =
            sign * std::pow(2.0 * kPi, -m) * ball_moment(m, MultiIndex(half));
        CHECK(std::abs(coeff - oracle) <= 1e-12 * std::abs(oracle));
      }
    }
  }
}

TEST_CASE("diagonal coefficients: swap symmetry mod 4") {
  for (int m = 1; m <= 2; ++m) {
    const std::vector<MultiIndex> indices = all_indices(m, 4);
    for (const MultiIndex& alpha : indices) {
      for (const MultiIndex& beta : indices) {
        const double ab = diagonal_coefficient(m, alpha, beta);
        const double ba = diagonal_coefficient(m, beta, alpha);
        const int diff = alpha.order() - beta.order();
        if (((diff % 4) + 4) % 4 == 2) {
          CHECK(ab == -ba);
        } else if (diff % 2 == 0) {
          CHECK(ab == ba);
        }
      }
    }
  }
}

TEST_CASE("flat kernel: scaling, diagonal, and the L = 1 identity") {
  for (int m = 1; m <= 3; ++m) {
    for (double r = 0.0; r <= 3.0; r += 0.375) {
      CHECK(flat_kernel(m, 1.0, r) == universal_profile(m, r));
      const double L = 7.3;
      CHECK(flat_kernel(m, L, r) ==
            doctest::Approx(std::pow(L, 0.5 * m) * flat_kernel(m, 1.0, std::sqrt(L) * r))
                .epsilon(1e-15));
    }
    const double L = 2.9;
    const double diag = flat_kernel(m, L, 0.0);
    CHECK(diag == doctest::Approx(std::pow(L, 0.5 * m) * universal_profile(m, 0.0)).epsilon(1e-15));
  }
}

TEST_CASE("ball quadrature: diagonal values") {
  const std::vector<double> u1 = {0.0};
  const std::vector<double> u2 = {0.0, 0.0};
  CHECK(std::abs(ball_quadrature(1, u1) - 1.0 / kPi) <= 2e-6);
  CHECK(std::abs(ball_quadrature(2, u2) - 1.0 / (4.0 * kPi)) <= 2e-6);
}

TEST_CASE("ball quadrature: matches the closed form (spot checks)") {
  for (double r : {0.5, 2.0, 7.25, 10.0}) {
    const std::vector<double> u1 = {r};
    CHECK(std::abs(ball_quadrature(1, u1) - universal_profile(1, r)) <= 2e-6);
    const std::vector<double> u2 = {r * 0.6, r * 0.8};
    CHECK(std::abs(ball_quadrature(2, u2) - universal_profile(2, r)) <= 2e-6);
  }
  const std::vector<double> u3 = {2.0, 1.0, -2.0};
  CHECK(std::abs(ball_quadrature(3, u3) - universal_profile(3, 3.0)) <= 2e-6);
}

TEST_CASE("ball quadrature: parallel kernel agrees with the serial reference") {
  const std::vector<double> u2 = {1.3, -0.4};
  CHECK(std::abs(ball_quadrature(2, u2) - ball_quadrature_serial(2, u2)) <= 1e-12);
  const std::vector<double> u1 = {4.2};
  CHECK(std::abs(ball_quadrature(1, u1) - ball_quadrature_serial(1, u1)) <= 1e-14);
}

TEST_CASE("ball quadrature: domain checks") {
  const std::vector<double> u = {25.0, 0.0};
  CHECK_THROWS_AS(ball_quadrature(2, u), std::domain_error);
  const std::vector<double> u4 = {0.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(ball_quadrature(4, u4), std::domain_error);
  const std::vector<double> mismatched = {0.0};
  CHECK_THROWS_AS(ball_quadrature(2, mismatched), std::domain_error);
}

TEST_SUITE_END();
