#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spectral/sphere.hpp"
#include "spectral/torus.hpp"

namespace spectral::experiments {

/// Per-level sup errors against the universal profile, with a log-log
/// least-squares fit over all levels (no outlier rejection).
struct ConvergenceReport {
  std::vector<double> levels;      // strictly increasing
  std::vector<double> sup_errors;  // >= 0
  double fitted_slope = 0.0;
  double fitted_intercept = 0.0;
};

/// Factorial growth fit of diagonal derivative magnitudes:
/// minimal constants with |d^j profile(0)| <= K T^j j! for every computed
/// order, tight at at least one order. T comes from the least-squares slope
/// of log(|d^j|/j!) over the nonzero orders, K is then pushed up to the
/// envelope.
struct GrowthFit {
  std::vector<int> orders;
  std::vector<double> magnitudes;  // |d^j profile(0)|
  double k_fit = 0.0;
  double t_fit = 0.0;
};

/// Leading term of the Bessel-type uniform approximation of P_{n,d}(cos
/// theta) near theta = 0:
///   Gamma(a+1) (theta/sin theta)^{1/2} (2 theta / sin theta)^a
///     (a_n theta)^{-a} J_a(a_n theta),
/// with a = (d-3)/2 and a_n = n + (d-2)/2. Requires 0 < theta <= pi/2.
double hilb_approx(const sphere::SphereGeometry& geom, int n, double theta);

/// Sphere convergence sweep: sup over the rescaled-distance grid of
/// |rescaled profile at level n - K_{d-1}|, per level, plus log-log fit.
/// Levels run in parallel; the report is assembled in level order.
ConvergenceReport converge_universality(const sphere::SphereGeometry& geom,
                                        std::span<const int> levels,
                                        std::span<const double> phi_grid);

/// Torus convergence sweep along a direction (trend only; the lattice sums
/// fluctuate, so no rate is asserted here).
ConvergenceReport converge_universality(const torus::TorusGeometry& geom,
                                        std::span<const double> levels,
                                        std::span<const double> direction,
                                        std::span<const double> s_grid,
                                        std::int64_t budget = torus::kDefaultPointBudget);

/// Exact radial derivatives d^j/dphi^j of the rescaled sphere profile at
/// phi = 0, j = 0..max_order (max_order even, <= 12), via jet arithmetic.
/// Odd orders are exactly zero (the profile is even).
std::vector<double> diagonal_derivatives(const sphere::SphereGeometry& geom, int n, int max_order);

/// Factorial growth fit of the diagonal derivatives at level n.
GrowthFit growth_fit(const sphere::SphereGeometry& geom, int n, int max_order);

/// Ordinary least-squares line fit; returns {slope, intercept}.
/// Throws std::invalid_argument with fewer than two points.
std::pair<double, double> least_squares_line(std::span<const double> x, std::span<const double> y);

}  // namespace spectral::experiments
