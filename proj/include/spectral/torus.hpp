#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spectral/radial_profile.hpp"

namespace spectral::torus {

/// Flat torus R^m / (side Z)^m, m in {1,2,3}. Eigenfunctions are plane waves
/// with frequencies on the dual lattice (2 pi / side) Z^m.
struct TorusGeometry {
  int m;
  double side;

  TorusGeometry(int dim, double s) : m(dim), side(s) {
    if (m < 1 || m > 3) throw std::domain_error("TorusGeometry: dimension must be in [1, 3]");
    if (!(side > 0.0)) throw std::domain_error("TorusGeometry: side must be > 0");
  }
};

inline constexpr std::int64_t kDefaultPointBudget = 100'000'000;

/// Integer lattice points with |z|^2 <= r2, sorted by (|z|^2, lexicographic)
/// and grouped into shells of equal squared norm. Shared between evaluations
/// at a fixed level so the enumeration cost is paid once.
struct LatticeBall {
  int dim = 0;
  std::vector<std::array<int, 3>> points;                    // first `dim` entries used
  std::vector<std::pair<std::size_t, std::size_t>> shells;   // [begin, end) runs

  /// Enumerates the ball; throws resource_error when the point count would
  /// exceed the budget.
  static LatticeBall build(int m, double r2, std::int64_t budget = kDefaultPointBudget);
};

/// Spectral function of the torus Laplacian at separation u:
///   E_L(u) = side^{-m} sum_{k in (2 pi / side) Z^m, |k|^2 <= L} cos(k . u).
/// Shells are summed with compensated accumulation and merged in ascending
/// |k|^2 order, so the result is bit-stable across thread counts and agrees
/// with any other enumeration order to ~1e-12 relative.
double torus_spectral(const TorusGeometry& geom, double L, std::span<const double> u,
                      std::int64_t budget = kDefaultPointBudget);

/// Single-threaded reference: one plain compensated sweep in lexicographic
/// lattice order, no shell grouping.
double torus_spectral_serial(const TorusGeometry& geom, double L, std::span<const double> u,
                             std::int64_t budget = kDefaultPointBudget);

/// Evaluation against a prebuilt enumeration (parallel over shells).
double torus_spectral(const TorusGeometry& geom, const LatticeBall& ball,
                      std::span<const double> u);

/// Rescaled diagonal profile along a direction:
///   s -> L^{-m/2} E_L( (s / sqrt(L)) * direction ).
/// All grid points must satisfy s <= sqrt(L) * side / 4 (the injectivity
/// chart); the direction is normalized internally.
RadialProfile rescaled_torus_profile(const TorusGeometry& geom, double L,
                                     std::span<const double> direction,
                                     std::span<const double> ss,
                                     std::int64_t budget = kDefaultPointBudget);

}  // namespace spectral::torus
