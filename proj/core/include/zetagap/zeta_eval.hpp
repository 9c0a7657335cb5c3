#pragma once

#include <complex>

namespace zetagap::zeta {

enum class Method { riemann_siegel, euler_maclaurin };

/// Riemann-Siegel is only used at or above this height; its remainder
/// estimates are not valid below it.
inline constexpr double kRiemannSiegelSwitch = 200.0;

/// Highest |t| accepted by the evaluators.
inline constexpr double kMaxHeight = 1.0e7;

struct Precision {
  double target_abs_err = 1e-8;
  Method method = Method::riemann_siegel;
};

/// Target used when a caller needs the sign of Z resolved as finely as the
/// double-precision Euler-Maclaurin path allows.
inline constexpr Precision kFinePrecision{1e-10, Method::euler_maclaurin};

/// A real value with an absolute error bound: the true value lies in
/// [value - err_radius, value + err_radius].
struct EvalResult {
  double value = 0.0;
  double err_radius = 0.0;
  double t = 0.0;
  Method method = Method::euler_maclaurin;
};

struct ComplexEvalResult {
  std::complex<double> value;
  double err_radius = 0.0;  // bound on |computed - exact|
  double t = 0.0;
};

/// Riemann-Siegel phase theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi,
/// continuous with theta(0) = 0. Absolute error below 1e-12 for t in
/// (0, kMaxHeight]. Throws DomainError for t <= 0.
double theta(double t);

/// theta'(t), used by the Gram-point Newton iteration.
double theta_derivative(double t);

/// Hardy's function Z(t) = exp(i theta(t)) zeta(1/2 + it).
///
/// prec.method is a preference: Riemann-Siegel is used when t is at least
/// kRiemannSiegelSwitch and its remainder bound meets the target, otherwise
/// the Euler-Maclaurin path is taken. Throws DomainError for t < 0 or
/// t > kMaxHeight and PrecisionUnreachable when neither path can certify
/// prec.target_abs_err.
EvalResult hardy_Z(double t, Precision prec = {});

/// zeta(1/2 + it) rebuilt as Z(t) exp(-i theta(t)); its modulus is |Z(t)|.
ComplexEvalResult zeta_half(double t, Precision prec = {});

/// zeta(sigma + it) for 0 < sigma <= 2 by Euler-Maclaurin summation, with
/// err_radius <= 1e-10 (documented contract: 1e-8). Throws DomainError
/// outside the strip, above kMaxHeight, and at the pole s = 1.
ComplexEvalResult zeta_general(double sigma, double t);

}  // namespace zetagap::zeta
