#include "zetagap/counting.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "zetagap/errors.hpp"
#include "zetagap/zeta_eval.hpp"

namespace zetagap::counting {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInitialStep = 0.05;
constexpr double kMinStep = 1e-12;
constexpr double kNudge = 1e-9;

double track_argument(double T) {
  const auto start = zeta::zeta_general(2.0, T);
  // Re zeta(2 + it) >= 2 - pi^2/6 > 0, so the principal value is the
  // continuous one along the vertical leg.
  double total = std::arg(start.value);
  std::complex<double> prev = start.value;
  double sigma = 2.0;
  double step = kInitialStep;
  while (sigma > 0.5) {
    const double h = std::min(step, sigma - 0.5);
    const double next_sigma = (h == sigma - 0.5) ? 0.5 : sigma - h;
    const auto z = zeta::zeta_general(next_sigma, T);
    if (std::abs(z.value) <= z.err_radius) {
      throw StepCollapse("zeta vanishes on the argument path at height " + std::to_string(T));
    }
    const double d = std::arg(z.value / prev);
    if (std::fabs(d) > 0.5 * kPi) {
      step = 0.5 * h;
      if (step < kMinStep) {
        throw StepCollapse("argument step collapsed at height " + std::to_string(T));
      }
      continue;
    }
    total += d;
    prev = z.value;
    sigma = next_sigma;
    step = std::min(kInitialStep, 2.0 * h);
  }
  return total / kPi;
}

}  // namespace

double n_main(double T) {
  if (!(T > 0.0)) throw PreconditionError("n_main requires T > 0");
  const double x = T / (2.0 * kPi);
  return x * std::log(x) - x + 0.875;
}

namespace detail {

double s_of_T_any(double T) {
  if (!(T > 0.0)) throw PreconditionError("S(T) requires T > 0");
  try {
    return track_argument(T);
  } catch (const StepCollapse&) {
    return track_argument(T + kNudge);
  }
}

}  // namespace detail

double s_of_T(double T) {
  if (!(T >= 10.0)) throw PreconditionError("s_of_T requires T >= 10");
  return detail::s_of_T_any(T);
}

CountingTerms counting_terms(double T) {
  CountingTerms c;
  c.T = T;
  c.main_term = n_main(T);
  c.s_value = s_of_T(T);
  c.n_estimate = c.main_term + c.s_value;
  c.o_term_bound = 1.0 / T;
  return c;
}

double trudgian_bound(double T) {
  if (!(T >= std::numbers::e * (1.0 - 1e-15))) {
    throw PreconditionError("Trudgian's bound requires T >= e");
  }
  const double lt = std::log(T);
  return 0.112 * lt + 0.278 * std::log(std::max(lt, 1.0)) + 2.510;
}

std::vector<BoundCheck> check_S_bounds(double T, bool assume_rh) {
  const double rhs = trudgian_bound(T);
  const double s = detail::s_of_T_any(T);
  const double abs_s = std::fabs(s);
  const double lt = std::log(T);
  const double llt = std::log(std::max(lt, 1.0));

  std::vector<BoundCheck> out;
  out.push_back(verdict_check("2.3", T, abs_s, rhs, {{"S", s}}));
  out.push_back(report_check("1.4", T, abs_s / lt, 1.0, {{"S", s}},
                             "|S(T)|/log T; implied constant unspecified"));
  if (assume_rh) {
    const double ratio = abs_s * llt / lt;
    out.push_back(report_check("1.4-LH", T, abs_s / lt, 0.0, {{"S", s}},
                               "|S(T)|/log T, expected to tend to 0 under LH"));
    out.push_back(report_check("1.4-RH", T, ratio, 1.0, {{"S", s}},
                               "|S(T)| log log T / log T; implied constant unspecified"));
    out.push_back(report_check("2.2", T, ratio, 0.25, {{"S", s}},
                               "|S(T)| log log T / log T against 1/4 + o(1)"));
    out.push_back(report_check("2.2-GG", T, ratio, 0.5, {{"S", s}},
                               "Goldston-Gonek constant 1/2 + o(1)"));
    if (llt > 1.0) {
      const double correction = std::log(llt) / llt;
      out.push_back(report_check("2.2-refined", T, ratio, 0.25 + correction,
                                 {{"S", s}, {"logloglogT_over_loglogT", correction}},
                                 "1/4 + O(logloglog T / loglog T) with O-constant 1"));
    }
  }
  return out;
}

}  // namespace zetagap::counting
