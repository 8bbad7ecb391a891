#include "spectral/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spectral/errors.hpp"
#include "spectral/summation.hpp"

namespace spectral::torus {

namespace {

constexpr double kPi = std::numbers::pi;

std::int64_t squared_norm(const std::array<int, 3>& z, int dim) {
  std::int64_t s = 0;
  for (int i = 0; i < dim; ++i) s += static_cast<std::int64_t>(z[i]) * z[i];
  return s;
}

// Count before materializing, so an over-budget request fails fast.
std::int64_t count_points(int m, double r2) {
  if (r2 < 0.0) return 0;
  const auto zmax = static_cast<std::int64_t>(std::floor(std::sqrt(r2)));
  if (m == 1) return 2 * zmax + 1;
  std::int64_t count = 0;
  for (std::int64_t z1 = -zmax; z1 <= zmax; ++z1) {
    const double rem1 = r2 - static_cast<double>(z1) * static_cast<double>(z1);
    if (rem1 < 0.0) continue;
    const auto w1 = static_cast<std::int64_t>(std::floor(std::sqrt(rem1)));
    if (m == 2) {
      count += 2 * w1 + 1;
    } else {
      for (std::int64_t z2 = -w1; z2 <= w1; ++z2) {
        const double rem2 = rem1 - static_cast<double>(z2) * static_cast<double>(z2);
        count += 2 * static_cast<std::int64_t>(std::floor(std::sqrt(rem2))) + 1;
      }
    }
  }
  return count;
}

double dual_scale(const TorusGeometry& geom) { return 2.0 * kPi / geom.side; }

}  // namespace

LatticeBall LatticeBall::build(int m, double r2, std::int64_t budget) {
  if (m < 1 || m > 3) throw std::domain_error("LatticeBall: dimension must be in [1, 3]");
  LatticeBall ball;
  ball.dim = m;
  if (r2 < 0.0) return ball;
  const std::int64_t n = count_points(m, r2);
  if (n > budget) {
    throw resource_error("LatticeBall: lattice point count " + std::to_string(n) +
                         " exceeds budget " + std::to_string(budget));
  }
  ball.points.reserve(static_cast<std::size_t>(n));
  const int zmax = static_cast<int>(std::floor(std::sqrt(r2)));
  // Lexicographic sweep; a stable sort by |z|^2 afterwards keeps the
  // lexicographic order inside each shell.
  for (int z1 = -zmax; z1 <= zmax; ++z1) {
    const double rem1 = r2 - static_cast<double>(z1) * static_cast<double>(z1);
    if (rem1 < 0.0) continue;
    if (m == 1) {
      ball.points.push_back({z1, 0, 0});
      continue;
    }
    const int w1 = static_cast<int>(std::floor(std::sqrt(rem1)));
    for (int z2 = -w1; z2 <= w1; ++z2) {
      if (m == 2) {
        ball.points.push_back({z1, z2, 0});
        continue;
      }
      const double rem2 = rem1 - static_cast<double>(z2) * static_cast<double>(z2);
      const int w2 = static_cast<int>(std::floor(std::sqrt(rem2)));
      for (int z3 = -w2; z3 <= w2; ++z3) ball.points.push_back({z1, z2, z3});
    }
  }
  std::stable_sort(ball.points.begin(), ball.points.end(),
                   [m](const std::array<int, 3>& a, const std::array<int, 3>& b) {
                     return squared_norm(a, m) < squared_norm(b, m);
                   });
  std::size_t begin = 0;
  while (begin < ball.points.size()) {
    const std::int64_t s = squared_norm(ball.points[begin], m);
    std::size_t end = begin + 1;
    while (end < ball.points.size() && squared_norm(ball.points[end], m) == s) ++end;
    ball.shells.emplace_back(begin, end);
    begin = end;
  }
  return ball;
}

double torus_spectral(const TorusGeometry& geom, const LatticeBall& ball,
                      std::span<const double> u) {
  if (static_cast<int>(u.size()) != geom.m) {
    throw std::domain_error("torus_spectral: point dimension mismatch");
  }
  const double scale = dual_scale(geom);
  double phase[3] = {0.0, 0.0, 0.0};
  for (int i = 0; i < geom.m; ++i) phase[i] = scale * u[i];
  const auto shell_count = static_cast<std::int64_t>(ball.shells.size());
  std::vector<double> shell_sums(ball.shells.size());
  // One compensated sum per shell, shells merged in ascending |k|^2 order:
  // the value does not depend on how shells were distributed over threads.
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t si = 0; si < shell_count; ++si) {
    const auto [begin, end] = ball.shells[static_cast<std::size_t>(si)];
    CompensatedSum acc;
    for (std::size_t p = begin; p < end; ++p) {
      const auto& z = ball.points[p];
      double arg = 0.0;
      for (int i = 0; i < geom.m; ++i) arg += phase[i] * z[i];
      acc.add(std::cos(arg));
    }
    shell_sums[static_cast<std::size_t>(si)] = acc.value();
  }
  CompensatedSum total;
  for (double s : shell_sums) total.add(s);
  return total.value() * std::pow(geom.side, -geom.m);
}

double torus_spectral(const TorusGeometry& geom, double L, std::span<const double> u,
                      std::int64_t budget) {
  if (L < 0.0) throw std::domain_error("torus_spectral: level must be >= 0");
  const double r2 = L / (dual_scale(geom) * dual_scale(geom));
  const LatticeBall ball = LatticeBall::build(geom.m, r2, budget);
  return torus_spectral(geom, ball, u);
}

double torus_spectral_serial(const TorusGeometry& geom, double L, std::span<const double> u,
                             std::int64_t budget) {
  if (L < 0.0) throw std::domain_error("torus_spectral: level must be >= 0");
  if (static_cast<int>(u.size()) != geom.m) {
    throw std::domain_error("torus_spectral: point dimension mismatch");
  }
  const double scale = dual_scale(geom);
  const double r2 = L / (scale * scale);
  if (count_points(geom.m, r2) > budget) {
    throw resource_error("torus_spectral: lattice point count exceeds budget");
  }
  // Plain lexicographic sweep, one compensated chain; kept as the reference
  // the shell-ordered kernel is tested against.
  CompensatedSum acc;
  const int zmax = r2 >= 0.0 ? static_cast<int>(std::floor(std::sqrt(r2))) : -1;
  for (int z1 = -zmax; z1 <= zmax; ++z1) {
    const double rem1 = r2 - static_cast<double>(z1) * static_cast<double>(z1);
    if (rem1 < 0.0) continue;
    if (geom.m == 1) {
      acc.add(std::cos(scale * u[0] * z1));
      continue;
    }
    const int w1 = static_cast<int>(std::floor(std::sqrt(rem1)));
    for (int z2 = -w1; z2 <= w1; ++z2) {
      if (geom.m == 2) {
        acc.add(std::cos(scale * (u[0] * z1 + u[1] * z2)));
        continue;
      }
      const double rem2 = rem1 - static_cast<double>(z2) * static_cast<double>(z2);
      const int w2 = static_cast<int>(std::floor(std::sqrt(rem2)));
      for (int z3 = -w2; z3 <= w2; ++z3) {
        acc.add(std::cos(scale * (u[0] * z1 + u[1] * z2 + u[2] * z3)));
      }
    }
  }
  return acc.value() * std::pow(geom.side, -geom.m);
}

RadialProfile rescaled_torus_profile(const TorusGeometry& geom, double L,
                                     std::span<const double> direction,
                                     std::span<const double> ss, std::int64_t budget) {
  if (!(L > 0.0)) throw std::domain_error("rescaled_torus_profile: level must be > 0");
  if (static_cast<int>(direction.size()) != geom.m) {
    throw std::domain_error("rescaled_torus_profile: direction dimension mismatch");
  }
  double norm = 0.0;
  for (double c : direction) norm += c * c;
  norm = std::sqrt(norm);
  if (!(norm > 0.0)) throw std::domain_error("rescaled_torus_profile: direction must be nonzero");
  const double sqrt_l = std::sqrt(L);
  const double chart_bound = sqrt_l * geom.side / 4.0;
  for (double s : ss) {
    if (s < 0.0 || s > chart_bound) {
      throw std::domain_error("rescaled_torus_profile: grid exceeds the chart bound sqrt(L)*side/4");
    }
  }
  const double r2 = L / (dual_scale(geom) * dual_scale(geom));
  const LatticeBall ball = LatticeBall::build(geom.m, r2, budget);
  const double level_scale = std::pow(L, -0.5 * geom.m);

  RadialProfile out;
  out.manifold = Manifold::torus;
  out.level = L;
  out.distances.assign(ss.begin(), ss.end());
  out.values.resize(ss.size());
  std::vector<double> u(static_cast<std::size_t>(geom.m));
  for (std::size_t i = 0; i < ss.size(); ++i) {
    for (int c = 0; c < geom.m; ++c) u[static_cast<std::size_t>(c)] = ss[i] / sqrt_l * direction[c] / norm;
    out.values[i] = level_scale * torus_spectral(geom, ball, u);
  }
  out.validate();
  return out;
}

}  // namespace spectral::torus
