#include <array>
#include <cfloat>
#include <cmath>
#include <complex>
#include <numbers>

#include "zetagap/detail/zeta_internal.hpp"
#include "zetagap/errors.hpp"
#include "zetagap/summation.hpp"

namespace zetagap::zeta::detail {
namespace {

constexpr double kPi = std::numbers::pi;

// Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p). The zeros of the
// denominator are all cancelled by the numerator, so Psi is entire.
std::complex<double> psi(std::complex<double> p) {
  const std::complex<double> two_pi(2.0 * kPi, 0.0);
  return std::cos(two_pi * (p * p - p - 1.0 / 16.0)) / std::cos(two_pi * p);
}

constexpr int kMaxDerivative = 9;

// Psi^{(m)}(p) for m = 0..9 from one trapezoid rule on the Cauchy integral
// around a circle of radius 1/2. Nodes are offset by half a step so none
// lies on the real axis.
std::array<double, kMaxDerivative + 1> psi_derivatives(double p) {
  constexpr int kNodes = 96;
  constexpr double kRadius = 0.5;
  std::array<std::complex<double>, kMaxDerivative + 1> acc{};
  for (int j = 0; j < kNodes; ++j) {
    const double phi = 2.0 * kPi * (j + 0.5) / kNodes;
    const std::complex<double> e = std::polar(1.0, phi);
    const std::complex<double> f = psi(p + kRadius * e);
    std::complex<double> rot = 1.0;
    const std::complex<double> step = std::conj(e);
    for (int m = 0; m <= kMaxDerivative; ++m) {
      acc[m] += f * rot;
      rot *= step;
    }
  }
  std::array<double, kMaxDerivative + 1> out{};
  double factorial = 1.0;
  double rpow = 1.0;
  for (int m = 0; m <= kMaxDerivative; ++m) {
    if (m > 0) {
      factorial *= m;
      rpow *= kRadius;
    }
    out[m] = (acc[m].real() / kNodes) * factorial / rpow;
  }
  return out;
}

std::array<double, 4> corrections_direct(double p) {
  const auto d = psi_derivatives(p);
  const double pi2 = kPi * kPi;
  const double pi4 = pi2 * pi2;
  const double pi6 = pi4 * pi2;
  return {
      d[0],
      -d[3] / (96.0 * pi2),
      d[2] / (64.0 * pi2) + d[6] / (18432.0 * pi4),
      -d[1] / (64.0 * pi2) - d[5] / (3840.0 * pi4) - d[9] / (5308416.0 * pi6),
  };
}

// Chebyshev expansions of C_0..C_3 on p in [0, 1], built once.
struct CorrectionTable {
  static constexpr int kDegree = 48;
  std::array<std::array<double, kDegree>, 4> coeff{};

  CorrectionTable() {
    std::array<std::array<double, 4>, kDegree> samples{};
    for (int j = 0; j < kDegree; ++j) {
      const double x = std::cos(kPi * (j + 0.5) / kDegree);
      samples[j] = corrections_direct(0.5 * (x + 1.0));
    }
    for (int k = 0; k < 4; ++k) {
      for (int i = 0; i < kDegree; ++i) {
        double sum = 0.0;
        for (int j = 0; j < kDegree; ++j) {
          sum += samples[j][k] * std::cos(kPi * i * (j + 0.5) / kDegree);
        }
        coeff[k][i] = (i == 0 ? 1.0 : 2.0) * sum / kDegree;
      }
    }
  }

  double eval(int k, double p) const {
    const double x = 2.0 * p - 1.0;
    double b1 = 0.0;
    double b2 = 0.0;
    for (int i = kDegree - 1; i >= 1; --i) {
      const double b0 = 2.0 * x * b1 - b2 + coeff[k][i];
      b2 = b1;
      b1 = b0;
    }
    return x * b1 - b2 + coeff[k][0];
  }
};

const CorrectionTable& correction_table() {
  static const CorrectionTable table;
  return table;
}

// Chebyshev truncation and Cauchy-quadrature rounding, measured well below this.
constexpr double kCoefficientError = 1e-12;

}  // namespace

double rs_coefficient(int k, double p) {
  if (k < 0 || k > 3) throw PreconditionError("Riemann-Siegel coefficient index must be 0..3");
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("p must lie in [0, 1]");
  return correction_table().eval(k, p);
}

double rs_remainder_bound(double t) {
  // Gabcke (1979): |R_3(t)| <= 0.031 t^{-9/4} for t >= 200.
  return 0.031 * std::pow(t, -2.25);
}

RealWithError riemann_siegel_z(double t) {
  if (!(t >= 200.0)) throw PreconditionError("Riemann-Siegel evaluation requires t >= 200");
  constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;
  const long double tl = t;
  const long double tau = std::sqrt(tl / kTwoPi);
  const long N = static_cast<long>(std::floor(tau));
  const double p = static_cast<double>(tau - N);
  const long double th = theta_long(tl);

  CompensatedSum<long double> sum;
  long double weight_sum = 0.0L;
  for (long n = 1; n <= N; ++n) {
    const long double ln = log_of(n);
    long double phase = th - tl * ln;
    phase -= kTwoPi * std::nearbyint(phase / kTwoPi);
    const double w = 1.0 / std::sqrt(static_cast<double>(n));
    sum.add(w * std::cos(static_cast<double>(phase)));
    weight_sum += w;
  }

  const auto& table = correction_table();
  const double inv_tau = static_cast<double>(1.0L / tau);
  double corr = 0.0;
  double pow_tau = 1.0;
  for (int k = 0; k < 4; ++k) {
    corr += table.eval(k, p) * pow_tau;
    pow_tau *= inv_tau;
  }
  const double sign = (N % 2 == 1) ? 1.0 : -1.0;  // (-1)^{N-1}
  const double scale = std::sqrt(inv_tau);
  const double value = static_cast<double>(2.0L * sum.value()) + sign * scale * corr;

  const double phase_err = static_cast<double>(
      theta_error_bound(tl) + 8.0L * LDBL_EPSILON * (std::fabs(th) + tl * std::log(tau) + 8.0L));
  const double err = rs_remainder_bound(t) + 4.0 * scale * kCoefficientError +
                     2.0 * static_cast<double>(weight_sum) * (phase_err + 4.0 * DBL_EPSILON) +
                     4.0 * DBL_EPSILON * std::fabs(value);
  return {value, err};
}

}  // namespace zetagap::zeta::detail
