#include "spectral/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spectral/specfun.hpp"

namespace spectral::experiments {

namespace {

constexpr double kPi = std::numbers::pi;

void check_levels_increasing(std::size_t count, const double* levels) {
  if (count < 2) throw std::invalid_argument("converge_universality: need at least 2 levels");
  for (std::size_t i = 1; i < count; ++i) {
    if (!(levels[i] > levels[i - 1])) {
      throw std::invalid_argument("converge_universality: levels must be strictly increasing");
    }
  }
}

void fit_report(ConvergenceReport& report) {
  std::vector<double> lx(report.levels.size());
  std::vector<double> ly(report.levels.size());
  for (std::size_t i = 0; i < report.levels.size(); ++i) {
    lx[i] = std::log(report.levels[i]);
    ly[i] = std::log(std::max(report.sup_errors[i], 1e-300));
  }
  const auto [slope, intercept] = least_squares_line(lx, ly);
  report.fitted_slope = slope;
  report.fitted_intercept = intercept;
}

}  // namespace

std::pair<double, double> least_squares_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("least_squares_line: need at least 2 points");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("least_squares_line: degenerate abscissae");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

double hilb_approx(const sphere::SphereGeometry& geom, int n, double theta) {
  if (n < 1) throw std::domain_error("hilb_approx: level must be >= 1");
  if (!(theta > 0.0) || theta > kPi / 2.0) {
    throw std::domain_error("hilb_approx: angle must lie in (0, pi/2]");
  }
  const double alpha = geom.alpha();
  const double an = geom.a(n);
  const double x = an * theta;
  const double bessel = specfun::bessel_j(specfun::BesselOrder(geom.d - 3), x);
  return specfun::gamma_fn(alpha + 1.0) * std::sqrt(theta / std::sin(theta)) *
         std::pow(2.0 * theta / std::sin(theta), alpha) * std::pow(x, -alpha) * bessel;
}

ConvergenceReport converge_universality(const sphere::SphereGeometry& geom,
                                        std::span<const int> levels,
                                        std::span<const double> phi_grid) {
  if (levels.size() < 2) throw std::invalid_argument("converge_universality: need at least 2 levels");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] < 1 || (i > 0 && levels[i] <= levels[i - 1])) {
      throw std::invalid_argument("converge_universality: levels must be increasing and >= 1");
    }
  }
  for (double phi : phi_grid) {
    if (!(phi > 0.0) || phi > kPi / 4.0 + 1e-12) {
      throw std::invalid_argument("converge_universality: grid must lie in (0, pi/4]");
    }
  }
  const int m = geom.manifold_dim();
  std::vector<double> limit(phi_grid.size());
  for (std::size_t i = 0; i < phi_grid.size(); ++i) {
    limit[i] = specfun::universal_profile(m, phi_grid[i]);
  }

  ConvergenceReport report;
  report.levels.assign(levels.begin(), levels.end());
  report.sup_errors.resize(levels.size());
  const auto level_count = static_cast<std::int64_t>(levels.size());
  // One independent task per level, results slotted by index.
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t li = 0; li < level_count; ++li) {
    const RadialProfile profile =
        sphere::rescaled_profile_serial(geom, levels[static_cast<std::size_t>(li)], phi_grid);
    double sup = 0.0;
    for (std::size_t i = 0; i < phi_grid.size(); ++i) {
      sup = std::max(sup, std::abs(profile.values[i] - limit[i]));
    }
    report.sup_errors[static_cast<std::size_t>(li)] = sup;
  }
  fit_report(report);
  return report;
}

ConvergenceReport converge_universality(const torus::TorusGeometry& geom,
                                        std::span<const double> levels,
                                        std::span<const double> direction,
                                        std::span<const double> s_grid, std::int64_t budget) {
  check_levels_increasing(levels.size(), levels.data());
  std::vector<double> limit(s_grid.size());
  for (std::size_t i = 0; i < s_grid.size(); ++i) {
    limit[i] = specfun::universal_profile(geom.m, s_grid[i]);
  }
  ConvergenceReport report;
  report.levels.assign(levels.begin(), levels.end());
  report.sup_errors.resize(levels.size());
  for (std::size_t li = 0; li < levels.size(); ++li) {
    const RadialProfile profile =
        torus::rescaled_torus_profile(geom, levels[li], direction, s_grid, budget);
    double sup = 0.0;
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
      sup = std::max(sup, std::abs(profile.values[i] - limit[i]));
    }
    report.sup_errors[li] = sup;
  }
  fit_report(report);
  return report;
}

std::vector<double> diagonal_derivatives(const sphere::SphereGeometry& geom, int n,
                                         int max_order) {
  if (n < 1) throw std::domain_error("diagonal_derivatives: level must be >= 1");
  if (max_order < 0 || max_order > 12 || max_order % 2 != 0) {
    throw std::domain_error("diagonal_derivatives: max_order must be even and <= 12");
  }
  const TaylorJet jet = sphere::spectral_jet(geom, n, max_order);
  const double r_n = std::sqrt(sphere::eigenvalue(geom, n));
  std::vector<double> derivs(static_cast<std::size_t>(max_order) + 1);
  double scale = std::pow(r_n, -(geom.d - 1.0));
  for (int j = 0; j <= max_order; ++j) {
    derivs[static_cast<std::size_t>(j)] = scale * jet.derivative(j);
    scale /= r_n;
  }
  return derivs;
}

GrowthFit growth_fit(const sphere::SphereGeometry& geom, int n, int max_order) {
  const std::vector<double> derivs = diagonal_derivatives(geom, n, max_order);
  GrowthFit fit;
  fit.orders.resize(derivs.size());
  fit.magnitudes.resize(derivs.size());
  std::vector<double> fx, fy;
  double factorial = 1.0;
  for (std::size_t j = 0; j < derivs.size(); ++j) {
    if (j > 1) factorial *= static_cast<double>(j);
    fit.orders[j] = static_cast<int>(j);
    fit.magnitudes[j] = std::abs(derivs[j]);
    if (fit.magnitudes[j] > 0.0) {
      fx.push_back(static_cast<double>(j));
      fy.push_back(std::log(fit.magnitudes[j] / factorial));
    }
  }
  if (fx.size() < 2) {
    throw std::invalid_argument("growth_fit: too few nonzero magnitudes for a fit");
  }
  const auto [slope, intercept] = least_squares_line(fx, fy);
  fit.t_fit = std::exp(slope);
  // Push K up to the envelope so the bound holds everywhere and is tight at
  // (at least) the worst order.
  double k_fit = 0.0;
  factorial = 1.0;
  double t_pow = 1.0;
  for (std::size_t j = 0; j < fit.magnitudes.size(); ++j) {
    if (j > 1) factorial *= static_cast<double>(j);
    if (j > 0) t_pow *= fit.t_fit;
    k_fit = std::max(k_fit, fit.magnitudes[j] / (factorial * t_pow));
  }
  fit.k_fit = k_fit;
  return fit;
}

}  // namespace spectral::experiments
