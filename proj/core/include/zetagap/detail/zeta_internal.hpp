#pragma once

// Building blocks behind zeta_eval.hpp. Exposed for tests and benchmarks;
// not part of the stable surface.

#include <complex>

namespace zetagap::zeta::detail {

inline constexpr long kLogTableSize = 1L << 16;

/// ln(n) in extended precision, tabulated below kLogTableSize.
long double log_of(long n);

/// theta(t) in extended precision, t >= 0.
long double theta_long(long double t);

/// Conservative absolute error bound for theta_long(t).
long double theta_error_bound(long double t);

/// Riemann-Siegel correction coefficient C_k(p), k in [0, 3], p in [0, 1].
double rs_coefficient(int k, double p);

/// Gabcke's remainder bound after the C_0..C_3 corrections (t >= 200).
double rs_remainder_bound(double t);

struct RealWithError {
  double value;
  double err;
};

/// Z(t) by the Riemann-Siegel main sum with C_0..C_3. Requires t >= 200.
RealWithError riemann_siegel_z(double t);

struct ComplexWithError {
  std::complex<double> value;
  double err;
};

/// zeta(sigma + it) by Euler-Maclaurin summation. The cut-off N and the
/// number of Bernoulli terms are chosen so the remainder bound is below
/// target / 4; the returned err adds a rounding bound.
ComplexWithError euler_maclaurin(double sigma, double t, double target);

}  // namespace zetagap::zeta::detail
