#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace spectral::euclid {

/// Multi-index with nonnegative entries.
struct MultiIndex {
  std::vector<int> entries;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> e) : entries(std::move(e)) {
    for (int v : entries) {
      if (v < 0) throw std::domain_error("MultiIndex: entries must be >= 0");
    }
  }

  int dim() const { return static_cast<int>(entries.size()); }
  int order() const {
    int s = 0;
    for (int v : entries) s += v;
    return s;
  }
};

/// Flat-space spectral kernel for eigenvalues <= L at separation r:
/// the Fourier integral over the ball of radius sqrt(L), which reduces to
/// L^{m/2} K_m(sqrt(L) r) by scaling.
double flat_kernel(int m, double L, double r);

/// Deterministic midpoint tensor-grid quadrature of
/// (2 pi)^{-m} \int_{B_1^m} cos(xi . u) dxi, cells kept when their center
/// lies in the ball. Supported for m in {1,2,3}, |u| <= 20; absolute error
/// below 2e-6 at the built-in resolutions. OpenMP-parallel with a fixed
/// slab-order reduction, so results do not depend on the thread count.
double ball_quadrature(int m, std::span<const double> u);

/// Single-threaded reference implementation of ball_quadrature (one plain
/// compensated sweep in lexicographic cell order).
double ball_quadrature_serial(int m, std::span<const double> u);

/// Even moment of the unit ball, \int_{B_1^m} xi^{2 gamma} dxi
///   = 2/(2|gamma|+m) * prod_j Gamma(gamma_j + 1/2) / Gamma(|gamma| + m/2).
double ball_moment(int m, const MultiIndex& gamma);

/// Diagonal derivative coefficient
///   C_{alpha,beta} = (-1)^{(|a|-|b|)/2} prod_i (a_i + b_i - 1)!!
///       / ( (4 pi)^{m/2} 2^{(|a|+|b|)/2} Gamma(1 + m/2 + (|a|+|b|)/2) ),
/// and 0 whenever alpha - beta has an odd entry.
double diagonal_coefficient(int m, const MultiIndex& alpha, const MultiIndex& beta);

}  // namespace spectral::euclid
