#pragma once

#include <vector>

#include "zetagap/bound_check.hpp"

namespace zetagap::counting {

/// Terms of the Riemann-von Mangoldt formula at height T.
struct CountingTerms {
  double T = 0.0;
  double main_term = 0.0;   // (T/2pi) log(T/2pi) - T/2pi + 7/8
  double s_value = 0.0;     // S(T)
  double n_estimate = 0.0;  // main_term + s_value
  double o_term_bound = 0.0;  // allowance for the O(1/T) term, taken as 1/T
};

/// (T/2pi) log(T/2pi) - T/2pi + 7/8. Requires T > 0.
double n_main(double T);

/// S(T) = (1/pi) arg zeta(1/2 + iT), continued along 2 -> 2+iT -> 1/2+iT.
///
/// The vertical leg never leaves the half-plane Re zeta > 0, so it contributes
/// the principal argument at 2+iT; the horizontal leg is tracked with step
/// 0.05, halved whenever consecutive samples differ in phase by more than
/// pi/2. If the path runs through a zero the height is nudged up by 1e-9 once,
/// which returns S(T+0). Requires T >= 10.
double s_of_T(double T);

CountingTerms counting_terms(double T);

/// Trudgian's explicit bound 0.112 log T + 0.278 log log T + 2.510 (T >= e).
double trudgian_bound(double T);

/// Every S(T) bound instantiated at T >= e: Trudgian's bound is
/// verdict-bearing, the rest are report-only. Bounds conditional on RH are
/// emitted only when assume_rh is set.
std::vector<BoundCheck> check_S_bounds(double T, bool assume_rh);

namespace detail {
/// s_of_T without the T >= 10 precondition (any T > 0).
double s_of_T_any(double T);
}  // namespace detail

}  // namespace zetagap::counting
