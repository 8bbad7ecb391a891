#include "spectral/sphere.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include "spectral/specfun.hpp"
#include "spectral/summation.hpp"

namespace spectral::sphere {

namespace {

constexpr double kPi = std::numbers::pi;

// Exact binomial C(n, k) for small k, with overflow detection.
unsigned __int128 binomial_u128(int n, int k) {
  if (k < 0 || k > n) return 0;
  constexpr unsigned __int128 kLimit = ~static_cast<unsigned __int128>(0);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    const unsigned __int128 factor = static_cast<unsigned>(n - k + i);
    if (factor != 0 && r > kLimit / factor) {
      throw std::overflow_error("multiplicity: intermediate binomial overflows");
    }
    r = r * factor / static_cast<unsigned>(i);  // division is exact at each step
  }
  return r;
}

// Shared small-angle fallback threshold of the Christoffel-Darboux form.
constexpr double kCdFallback = 1e-6;

}  // namespace

double eigenvalue(const SphereGeometry& geom, int n) {
  if (n < 0) throw std::domain_error("eigenvalue: degree must be >= 0");
  return static_cast<double>(n) * (n + geom.d - 2);
}

long long multiplicity(const SphereGeometry& geom, int n) {
  if (n < 0) throw std::domain_error("multiplicity: degree must be >= 0");
  if (n == 0) return 1;
  // mu_n = C(n+d-2, d-2) + C(n+d-3, d-2): the dimension count of harmonic
  // polynomials, summed rather than subtracted so every step stays exact.
  const unsigned __int128 mu =
      binomial_u128(n + geom.d - 2, geom.d - 2) + binomial_u128(n + geom.d - 3, geom.d - 2);
  if (mu > static_cast<unsigned __int128>(std::numeric_limits<long long>::max())) {
    throw std::overflow_error("multiplicity: value exceeds 64-bit range");
  }
  return static_cast<long long>(mu);
}

double sphere_area(int d) {
  if (d < 2) throw std::domain_error("sphere_area: dimension must be >= 2");
  return 2.0 * std::pow(kPi, 0.5 * d) / specfun::gamma_fn(0.5 * d);
}

double legendre(const SphereGeometry& geom, int n, double t) {
  if (n < 0) throw std::domain_error("legendre: degree must be >= 0");
  if (std::abs(t) > 1.0) throw std::domain_error("legendre: argument must lie in [-1, 1]");
  if (n == 0) return 1.0;
  double p_prev = 1.0;
  double p_cur = t;
  for (int k = 1; k < n; ++k) {
    const double p_next = ((2.0 * k + geom.d - 2) * t * p_cur - k * p_prev) / (k + geom.d - 2);
    p_prev = p_cur;
    p_cur = p_next;
  }
  return p_cur;
}

std::vector<double> legendre_all(const SphereGeometry& geom, int n, double t) {
  if (n < 0) throw std::domain_error("legendre_all: degree must be >= 0");
  if (std::abs(t) > 1.0) throw std::domain_error("legendre_all: argument must lie in [-1, 1]");
  std::vector<double> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1.0;
  if (n >= 1) p[1] = t;
  for (int k = 1; k < n; ++k) {
    p[k + 1] = ((2.0 * k + geom.d - 2) * t * p[k] - k * p[k - 1]) / (k + geom.d - 2);
  }
  return p;
}

TaylorJet legendre_jet(const SphereGeometry& geom, int n, const TaylorJet& arg) {
  if (n < 0) throw std::domain_error("legendre_jet: degree must be >= 0");
  TaylorJet p_prev = TaylorJet::constant(1.0, arg.center(), arg.order());
  if (n == 0) return p_prev;
  TaylorJet p_cur = arg;
  for (int k = 1; k < n; ++k) {
    TaylorJet p_next = ((2.0 * k + geom.d - 2) * (arg * p_cur) - static_cast<double>(k) * p_prev) *
                       (1.0 / (k + geom.d - 2));
    p_prev = p_cur;
    p_cur = p_next;
  }
  return p_cur;
}

double h_norm(const SphereGeometry& geom, int n) {
  return sphere_area(geom.d) /
         (sphere_area(geom.d - 1) * static_cast<double>(multiplicity(geom, n)));
}

double leading_ratio(const SphereGeometry& geom, int n) {
  if (n < 0) throw std::domain_error("leading_ratio: degree must be >= 0");
  return (n + geom.d - 2.0) / (2.0 * n + geom.d - 2.0);
}

double spectral_direct(const SphereGeometry& geom, int n, double t) {
  if (n < 0) throw std::domain_error("spectral_direct: degree must be >= 0");
  if (std::abs(t) > 1.0) throw std::domain_error("spectral_direct: argument must lie in [-1, 1]");
  const double inv_area = 1.0 / sphere_area(geom.d);
  CompensatedSum sum;
  double p_prev = 1.0;
  sum.add(inv_area);  // m = 0, mu_0 = 1
  if (n == 0) return sum.value();
  double p_cur = t;
  sum.add(static_cast<double>(multiplicity(geom, 1)) * inv_area * p_cur);
  for (int k = 1; k < n; ++k) {
    const double p_next = ((2.0 * k + geom.d - 2) * t * p_cur - k * p_prev) / (k + geom.d - 2);
    p_prev = p_cur;
    p_cur = p_next;
    sum.add(static_cast<double>(multiplicity(geom, k + 1)) * inv_area * p_cur);
  }
  return sum.value();
}

double spectral_cd(const SphereGeometry& geom, int n, double phi) {
  if (n < 0) throw std::domain_error("spectral_cd: degree must be >= 0");
  if (phi < 0.0 || phi > kPi) throw std::domain_error("spectral_cd: distance must lie in [0, pi]");
  const double t = std::cos(phi);
  if (std::abs(t - 1.0) < kCdFallback) return spectral_direct(geom, n, t);
  double p_prev = 1.0;
  double p_cur = t;
  for (int k = 1; k <= n; ++k) {
    const double p_next = ((2.0 * k + geom.d - 2) * t * p_cur - k * p_prev) / (k + geom.d - 2);
    p_prev = p_cur;
    p_cur = p_next;
  }
  // p_cur = P_{n+1}, p_prev = P_n.
  const double prefactor =
      static_cast<double>(multiplicity(geom, n)) / sphere_area(geom.d) * leading_ratio(geom, n);
  return prefactor * (p_cur - p_prev) / (t - 1.0);
}

TaylorJet spectral_jet(const SphereGeometry& geom, int n, int order) {
  if (n < 0) throw std::domain_error("spectral_jet: degree must be >= 0");
  const TaylorJet arg = TaylorJet::cosine(order);
  const double inv_area = 1.0 / sphere_area(geom.d);
  TaylorJet p_prev = TaylorJet::constant(1.0, 0.0, order);
  TaylorJet acc = inv_area * p_prev;
  if (n == 0) return acc;
  TaylorJet p_cur = arg;
  acc += static_cast<double>(multiplicity(geom, 1)) * inv_area * p_cur;
  for (int k = 1; k < n; ++k) {
    TaylorJet p_next = ((2.0 * k + geom.d - 2) * (arg * p_cur) - static_cast<double>(k) * p_prev) *
                       (1.0 / (k + geom.d - 2));
    p_prev = p_cur;
    p_cur = p_next;
    acc += static_cast<double>(multiplicity(geom, k + 1)) * inv_area * p_cur;
  }
  return acc;
}

namespace {

RadialProfile profile_impl(const SphereGeometry& geom, int n, std::span<const double> phis,
                           bool parallel) {
  if (n < 1) throw std::domain_error("rescaled_profile: level must be >= 1 (r_0 = 0)");
  const double r_n = std::sqrt(eigenvalue(geom, n));
  const double scale = std::pow(r_n, -(geom.d - 1.0));
  for (double phi : phis) {
    if (phi < 0.0 || phi > kPi / 4.0 + 1e-12) {
      throw std::domain_error("rescaled_profile: grid must lie in [0, pi/4]");
    }
  }
  RadialProfile out;
  out.manifold = Manifold::sphere;
  out.level = n;
  out.distances.assign(phis.begin(), phis.end());
  out.values.resize(phis.size());
  const std::int64_t count = static_cast<std::int64_t>(phis.size());
  // Each grid point is an independent recurrence run, so the parallel loop
  // is bit-stable across thread counts.
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t i = 0; i < count; ++i) {
    out.values[static_cast<std::size_t>(i)] =
        scale * spectral_cd(geom, n, phis[static_cast<std::size_t>(i)] / r_n);
  }
  out.validate();
  return out;
}

}  // namespace

RadialProfile rescaled_profile(const SphereGeometry& geom, int n, std::span<const double> phis) {
  return profile_impl(geom, n, phis, true);
}

RadialProfile rescaled_profile_serial(const SphereGeometry& geom, int n,
                                      std::span<const double> phis) {
  return profile_impl(geom, n, phis, false);
}

}  // namespace spectral::sphere
