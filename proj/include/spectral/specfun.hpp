#pragma once

namespace spectral::specfun {

/// Order of a Bessel function of the first kind, stored as twice its value
/// so that integer and half-integer orders are represented exactly.
struct BesselOrder {
  int twice_order = 0;

  constexpr BesselOrder() = default;
  constexpr explicit BesselOrder(int twice) : twice_order(twice) {}
  static constexpr BesselOrder integer(int n) { return BesselOrder(2 * n); }
  static constexpr BesselOrder half_integer(int n) { return BesselOrder(2 * n + 1); }

  constexpr double value() const { return 0.5 * twice_order; }
  constexpr bool is_integer() const { return twice_order % 2 == 0; }
};

/// Gamma function for x > 0 (Lanczos rational approximation; relative error
/// well below 1e-13 on (0, 50]). Throws std::domain_error for x <= 0.
double gamma_fn(double x);

/// Double factorial k!! = k(k-2)(k-4)..., with (-1)!! = 0!! = 1.
/// Throws std::domain_error for k < -1, std::overflow_error past 64 bits.
long long double_factorial(int k);

/// J_nu(x) for x >= 0 and nu in {0, 1/2, 1, ...}. Absolute error <= 1e-10 on
/// x in [0, 50] for nu <= 15/2. Dispatches between the power series (x <= 20)
/// and, beyond the crossover, the spherical-Bessel closed form (half-integer
/// orders) or the large-argument sin/cos expansion (integer orders).
double bessel_j(BesselOrder nu, double x);

/// Power-series evaluation of J_nu(x) (accumulated in extended precision,
/// terms dropped below 1e-18 of the running sum). Usable on [0, ~40] for the
/// orders supported here; exposed so the independent paths can be compared.
double bessel_j_series(BesselOrder nu, double x);

/// Closed-form J_{n+1/2}(x) as a finite sin/cos combination via the spherical
/// Bessel recurrence. Independent of the power-series path.
double bessel_j_half_closed(int n, double x);

/// The rotation-invariant profile K_m(s) = (2 pi s)^{-m/2} J_{m/2}(s),
/// extended continuously to s = 0 where it equals vol(B_1^m) / (2 pi)^m.
/// This is the large-level limit of the rescaled spectral kernels.
double universal_profile(int m, double s);

}  // namespace spectral::specfun
