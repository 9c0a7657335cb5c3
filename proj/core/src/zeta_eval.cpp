#include "zetagap/zeta_eval.hpp"

#include <array>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "zetagap/detail/zeta_internal.hpp"
#include "zetagap/errors.hpp"
#include "zetagap/summation.hpp"

namespace zetagap::zeta {
namespace detail {
namespace {

using cld = std::complex<long double>;

constexpr long double kPi = std::numbers::pi_v<long double>;
constexpr long double kTwoPi = 2.0L * kPi;

// B_2j / (2j (2j-1)) for the Stirling series of log Gamma.
constexpr std::array<long double, 8> kStirling{
    1.0L / 12.0L,          -1.0L / 360.0L,     1.0L / 1260.0L,
    -1.0L / 1680.0L,       1.0L / 1188.0L,     -691.0L / 360360.0L,
    1.0L / 156.0L,         -3617.0L / 122400.0L};

// B_2j / (2j) for the digamma asymptotic series.
constexpr std::array<long double, 6> kDigamma{
    1.0L / 12.0L,  -1.0L / 120.0L, 1.0L / 252.0L,
    -1.0L / 240.0L, 1.0L / 132.0L, -691.0L / 32760.0L};

constexpr int kShift = 12;

// Im log Gamma(z) on the branch continuous from the positive real axis.
long double im_log_gamma(cld z) {
  long double args = 0.0L;
  for (int k = 0; k < kShift; ++k) args += std::arg(z + static_cast<long double>(k));
  const cld w = z + static_cast<long double>(kShift);
  cld series = (w - 0.5L) * std::log(w) - w;
  const cld inv = 1.0L / w;
  const cld inv2 = inv * inv;
  cld power = inv;
  for (long double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  return series.imag() - args;
}

cld digamma(cld z) {
  cld shift_sum = 0.0L;
  for (int k = 0; k < kShift; ++k) shift_sum += 1.0L / (z + static_cast<long double>(k));
  const cld w = z + static_cast<long double>(kShift);
  cld result = std::log(w) - 0.5L / w;
  const cld inv2 = 1.0L / (w * w);
  cld power = inv2;
  for (long double c : kDigamma) {
    result -= c * power;
    power *= inv2;
  }
  return result - shift_sum;
}

constexpr long double kAsymptoticFrom = 10.0L;

// 2 zeta(2j) / (2 pi)^2j with alternating sign, i.e. B_2j / (2j)!.
struct BernoulliRatios {
  static constexpr int kMax = 64;
  std::array<long double, kMax + 1> b{};

  BernoulliRatios() {
    for (int j = 1; j <= kMax; ++j) {
      long double zeta2j;
      if (j == 1) {
        zeta2j = kPi * kPi / 6.0L;
      } else if (j == 2) {
        zeta2j = std::pow(kPi, 4) / 90.0L;
      } else if (j == 3) {
        zeta2j = std::pow(kPi, 6) / 945.0L;
      } else if (j == 4) {
        zeta2j = std::pow(kPi, 8) / 9450.0L;
      } else {
        zeta2j = 0.0L;
        for (int n = 60; n >= 1; --n) zeta2j += std::pow(static_cast<long double>(n), -2.0L * j);
        zeta2j += std::pow(60.5L, 1.0L - 2.0L * j) / (2.0L * j - 1.0L);
      }
      const long double mag = 2.0L * zeta2j / std::pow(kTwoPi, 2.0L * j);
      b[j] = (j % 2 == 1) ? mag : -mag;
    }
  }
};

const BernoulliRatios& bernoulli_ratios() {
  static const BernoulliRatios table;
  return table;
}

}  // namespace

long double log_of(long n) {
  static const std::vector<long double> table = [] {
    std::vector<long double> v(kLogTableSize);
    for (long i = 1; i < kLogTableSize; ++i) v[i] = std::log(static_cast<long double>(i));
    return v;
  }();
  if (n < kLogTableSize) return table[n];
  return std::log(static_cast<long double>(n));
}

long double theta_long(long double t) {
  if (t == 0.0L) return 0.0L;
  if (t < kAsymptoticFrom) {
    return im_log_gamma(cld(0.25L, 0.5L * t)) - 0.5L * t * std::log(kPi);
  }
  const long double inv = 1.0L / t;
  const long double inv2 = inv * inv;
  const long double tail =
      inv * (1.0L / 48.0L +
             inv2 * (7.0L / 5760.0L +
                     inv2 * (31.0L / 80640.0L +
                             inv2 * (127.0L / 430080.0L + inv2 * (511.0L / 1216512.0L)))));
  return 0.5L * t * std::log(t / kTwoPi) - 0.5L * t - kPi / 8.0L + tail;
}

long double theta_error_bound(long double t) {
  const long double rounding = 64.0L * LDBL_EPSILON * (1.0L + std::fabs(t) * std::log(2.0L + t));
  if (t < kAsymptoticFrom) return rounding + 1e-17L;
  // first omitted term of the asymptotic series is 1414477/(1476304896 t^11) < 1e-6/t^11
  return rounding + 1e-6L * std::pow(t, -11.0L);
}

ComplexWithError euler_maclaurin(double sigma, double t, double target) {
  const cld s(sigma, t);
  if (sigma == 1.0 && t == 0.0) throw DomainError("zeta has a pole at s = 1");
  const auto& ratios = bernoulli_ratios();
  const long double abs_s = std::abs(s);

  // Choose N and m. term_j = b_j s(s+1)...(s+2j-2) N^{-s-2j+1}; the
  // remainder after m terms is bounded by |term_{m+1}| |s+2m+1|/(sigma+2m+1).
  long N = std::max(10L, static_cast<long>(std::ceil(1.4L * abs_s / kTwoPi)) + 5);
  int m = 0;
  long double rem_bound = 0.0L;
  for (;;) {
    const long double n_ld = static_cast<long double>(N);
    // |N^{-s-2j+1}| = N^{-sigma-2j+1}
    long double mag = std::fabs(ratios.b[1]) * abs_s * std::pow(n_ld, -sigma - 1.0L);
    bool found = false;
    for (int j = 1; j < BernoulliRatios::kMax; ++j) {
      // mag is |term_j|; bound for truncating before term_j (m = j - 1)
      const long double bound =
          mag * std::abs(s + static_cast<long double>(2 * j - 1)) / (sigma + 2.0L * j - 1.0L);
      if (bound <= 0.25L * target) {
        m = j - 1;
        rem_bound = 1.25L * bound;  // slack for the tabulated zeta(2j)
        found = true;
        break;
      }
      const long double step = std::abs((s + static_cast<long double>(2 * j - 1)) *
                                        (s + static_cast<long double>(2 * j))) /
                               (n_ld * n_ld);
      mag *= std::fabs(ratios.b[j + 1] / ratios.b[j]) * step;
    }
    if (found) break;
    N = static_cast<long>(std::ceil(1.3L * N));
  }

  CompensatedSum<long double> re;
  CompensatedSum<long double> im;
  long double abs_sum = 0.0L;
  long double phase_err = 0.0L;
  const long double tl = t;
  for (long n = 1; n < N; ++n) {
    const long double ln = log_of(n);
    const double mag = std::exp(-sigma * static_cast<double>(ln));
    long double phase = -tl * ln;
    phase -= kTwoPi * std::nearbyint(phase / kTwoPi);
    const double ph = static_cast<double>(phase);
    re.add(mag * std::cos(ph));
    im.add(mag * std::sin(ph));
    abs_sum += mag;
    phase_err += mag * (std::fabs(tl) * ln * 4.0L * LDBL_EPSILON + 8.0L * DBL_EPSILON);
  }
  cld value(re.value(), im.value());

  const long double n_ld = static_cast<long double>(N);
  const cld n_pow_minus_s = std::exp(-s * std::log(n_ld));
  value += n_ld * n_pow_minus_s / (s - 1.0L);
  value += 0.5L * n_pow_minus_s;
  // Bernoulli correction terms
  cld rising = s;  // s(s+1)...(s+2j-2)
  cld npow = n_pow_minus_s / n_ld;  // N^{-s-2j+1}
  for (int j = 1; j <= m; ++j) {
    value += ratios.b[j] * rising * npow;
    rising *= (s + static_cast<long double>(2 * j - 1)) * (s + static_cast<long double>(2 * j));
    npow /= n_ld * n_ld;
  }

  const std::complex<double> out(static_cast<double>(value.real()),
                                 static_cast<double>(value.imag()));
  const long double err = rem_bound + phase_err + 16.0L * LDBL_EPSILON * (abs_sum + 1.0L) +
                          2.0L * DBL_EPSILON * std::abs(value);
  return {out, static_cast<double>(err)};
}

}  // namespace detail

namespace {

void check_height(double t) {
  if (!std::isfinite(t) || std::fabs(t) > kMaxHeight) {
    throw DomainError("height " + std::to_string(t) + " outside supported range");
  }
}

EvalResult hardy_z_euler_maclaurin(double t, double target) {
  // Spend a quarter of the budget on the truncation remainder; rounding and
  // the phase account for the rest.
  const auto zeta = detail::euler_maclaurin(0.5, t, std::max(target, 1e-14));
  const long double th = detail::theta_long(t);
  const std::complex<long double> rot(std::cos(th), std::sin(th));
  const std::complex<long double> z =
      rot * std::complex<long double>(zeta.value.real(), zeta.value.imag());
  const double err = zeta.err + std::abs(zeta.value) *
                                    static_cast<double>(detail::theta_error_bound(t) +
                                                        4.0L * LDBL_EPSILON);
  return {static_cast<double>(z.real()), err, t, Method::euler_maclaurin};
}

}  // namespace

double theta(double t) {
  if (!(t > 0.0)) throw DomainError("theta requires t > 0");
  check_height(t);
  return static_cast<double>(detail::theta_long(t));
}

double theta_derivative(double t) {
  if (!(t > 0.0)) throw DomainError("theta_derivative requires t > 0");
  check_height(t);
  if (t < 10.0) {
    const auto psi = detail::digamma(std::complex<long double>(0.25L, 0.5L * t));
    return static_cast<double>(0.5L * psi.real() - 0.5L * std::log(detail::kPi));
  }
  const double inv2 = 1.0 / (t * t);
  return 0.5 * std::log(t / (2.0 * std::numbers::pi)) -
         inv2 * (1.0 / 48.0 + inv2 * (7.0 / 1920.0 + inv2 * (31.0 / 16128.0)));
}

EvalResult hardy_Z(double t, Precision prec) {
  if (!(t >= 0.0)) throw DomainError("hardy_Z requires t >= 0");
  check_height(t);
  if (!(prec.target_abs_err > 0.0)) throw PreconditionError("target_abs_err must be positive");

  if (prec.method == Method::riemann_siegel && t >= kRiemannSiegelSwitch) {
    const auto rs = detail::riemann_siegel_z(t);
    if (rs.err <= prec.target_abs_err) {
      return {rs.value, rs.err, t, Method::riemann_siegel};
    }
  }
  auto em = hardy_z_euler_maclaurin(t, prec.target_abs_err);
  if (em.err_radius > prec.target_abs_err) {
    throw PrecisionUnreachable("cannot certify Z(" + std::to_string(t) + ") to " +
                               std::to_string(prec.target_abs_err));
  }
  return em;
}

ComplexEvalResult zeta_half(double t, Precision prec) {
  const auto z = hardy_Z(t, prec);
  const long double th = detail::theta_long(t);
  const std::complex<double> rot(static_cast<double>(std::cos(th)),
                                 static_cast<double>(-std::sin(th)));
  const double err = z.err_radius + std::fabs(z.value) * static_cast<double>(
                                                             detail::theta_error_bound(t)) +
                     2.0 * DBL_EPSILON * std::fabs(z.value);
  return {z.value * rot, err, t};
}

ComplexEvalResult zeta_general(double sigma, double t) {
  if (!(sigma > 0.0 && sigma <= 2.0)) {
    throw DomainError("zeta_general requires 0 < sigma <= 2");
  }
  check_height(t);
  const auto r = detail::euler_maclaurin(sigma, t, 1e-10);
  return {r.value, r.err, t};
}

}  // namespace zetagap::zeta
