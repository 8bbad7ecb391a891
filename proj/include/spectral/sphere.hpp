#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "spectral/radial_profile.hpp"
#include "spectral/taylor_jet.hpp"

namespace spectral::sphere {

/// The round unit sphere S^{d-1} embedded in R^d (so the manifold dimension
/// is d - 1). d >= 3; the circle is rejected because the weight exponent
/// (d-3)/2 turns negative there and the polynomial machinery changes.
struct SphereGeometry {
  int d;

  explicit SphereGeometry(int dim) : d(dim) {
    if (d < 3) throw std::domain_error("SphereGeometry: ambient dimension must be >= 3");
  }

  int manifold_dim() const { return d - 1; }
  /// Gegenbauer/Jacobi parameter (d-3)/2.
  double alpha() const { return 0.5 * (d - 3); }
  /// Frequency scale n + (d-2)/2 entering the Bessel approximation.
  double a(int n) const { return n + 0.5 * (d - 2); }
};

/// Laplacian eigenvalue n(n + d - 2) on S^{d-1}.
double eigenvalue(const SphereGeometry& geom, int n);

/// Dimension of the degree-n eigenspace, (2n+d-2)/(n+d-2) * C(n+d-2, d-2),
/// computed exactly in 128-bit integer arithmetic. Throws std::overflow_error
/// if the value does not fit a 64-bit integer.
long long multiplicity(const SphereGeometry& geom, int n);

/// Area of S^{d-1}: 2 pi^{d/2} / Gamma(d/2). Requires d >= 2.
double sphere_area(int d);

/// Legendre polynomial of degree n in dimension d (Gegenbauer normalized to
/// P(1) = 1), by the forward three-term recurrence
///   (k + d - 2) P_{k+1} = (2k + d - 2) t P_k - k P_{k-1}.
double legendre(const SphereGeometry& geom, int n, double t);

/// All of P_0..P_n at t in one recurrence sweep.
std::vector<double> legendre_all(const SphereGeometry& geom, int n, double t);

/// The same recurrence run in truncated power-series arithmetic: returns the
/// jet of P_{n,d}(arg(phi)) where arg is the supplied jet (typically cos phi
/// at phi = 0). Carries exact derivatives, no finite differences.
TaylorJet legendre_jet(const SphereGeometry& geom, int n, const TaylorJet& arg);

/// L2 norm of P_{n,d} under the weight (1-t^2)^{(d-3)/2}:
/// sigma_{d-1} / (sigma_{d-2} mu_n).
double h_norm(const SphereGeometry& geom, int n);

/// Ratio of leading coefficients k_n / k_{n+1} = (n+d-2)/(2n+d-2).
double leading_ratio(const SphereGeometry& geom, int n);

/// Spectral function E_n(t) = sum_{m<=n} (mu_m / sigma_{d-1}) P_{m,d}(t),
/// t = cos of the geodesic distance, accumulated with compensated summation.
double spectral_direct(const SphereGeometry& geom, int n, double t);

/// Closed (Christoffel-Darboux) form of the same spectral function in the
/// geodesic distance phi in [0, pi]:
///   E_n(phi) = (mu_n/sigma_{d-1}) (k_n/k_{n+1})
///              (P_{n+1}(cos phi) - P_n(cos phi)) / (cos phi - 1).
/// Falls back to spectral_direct when |cos phi - 1| < 1e-6, where the
/// quotient loses digits while the direct sum stays stable.
double spectral_cd(const SphereGeometry& geom, int n, double phi);

/// Jet of E_n(theta) at theta = 0 up to the given order (theta = geodesic
/// distance). Used to extract exact diagonal derivatives.
TaylorJet spectral_jet(const SphereGeometry& geom, int n, int order);

/// Rescaled diagonal profile: values r_n^{-(d-1)} E_n(phi / r_n) with
/// r_n = sqrt(lambda_n), sampled on a grid of rescaled distances in
/// [0, pi/4]. Requires n >= 1 (r_0 = 0). Grid points are evaluated in
/// parallel; each point is an independent recurrence run.
RadialProfile rescaled_profile(const SphereGeometry& geom, int n, std::span<const double> phis);

/// Single-threaded reference implementation of rescaled_profile.
RadialProfile rescaled_profile_serial(const SphereGeometry& geom, int n, std::span<const double> phis);

}  // namespace spectral::sphere
