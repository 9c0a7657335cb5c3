#pragma once

#include <vector>

#include "zetagap/zero_table.hpp"

namespace zetagap::zeros {

/// Default refinement tolerance on ordinates.
inline constexpr double kDefaultTolerance = 1e-9;

/// Gram point g_n: the solution of theta(g) = n pi on the increasing branch
/// of theta. Requires n >= -1. Throws ConvergenceFailure if the safeguarded
/// Newton iteration does not settle within 50 steps.
double gram_point(long n);

struct ScanOptions {
  int subdivision = 8;  // grid refinement factor per level
  int max_depth = 4;    // refinement levels tried on a deficient Gram block
};

/// Brackets of every sign change of Z(t) found on [t_lo, t_hi].
///
/// The grid is t_lo, the Gram points inside the range, and t_hi. Between two
/// consecutive good Gram points ((-1)^n Z(g_n) > 0) a Gram block of k
/// intervals is expected to hold k zeros; blocks that show fewer sign
/// changes are subdivided up to max_depth levels. Zeros still missing are
/// left for turing_certify to report. Requires 0 <= t_lo; an empty or
/// degenerate interval yields no brackets.
std::vector<Bracket> scan_zeros(double t_lo, double t_hi, const ScanOptions& options = {});

/// Shrinks a bracket to width at most 2 tol around its zero. Bisection runs
/// until the width is 1000 tol, then bracket-guarded secant steps finish the
/// job, falling back to bisection when they stall. The returned record has
/// sign_change_verified set; index is left as given.
///
/// Throws PreconditionError for an invalid bracket or tol < 1e-12 and
/// PrecisionUnreachable when Z cannot be evaluated accurately enough to
/// resolve its sign at the scale tol.
ZeroRecord refine_zero(const Bracket& bracket, double tol, long index = 0);

/// Sign of Z(t), escalating precision until it is certain. Returns 0 only
/// when |Z(t)| stays below the finest error radius available.
int certified_sign(double t);

struct CountSample {
  double T = 0.0;
  long located = 0;
  double formula_value = 0.0;  // n_main(T) + S(T)
  long formula_count = 0;      // nearest integer to formula_value
};

struct CertificationReport {
  double T = 0.0;
  long located = 0;
  double formula_value = 0.0;
  long formula_count = 0;
  long discrepancy = 0;  // located - formula_count
  std::vector<CountSample> samples;  // intermediate heights, ascending, ending at T
};

/// Checks that the records account for every zero up to T by comparing the
/// located count with n_main(T) + S(T) at T and at intermediate heights
/// between consecutive records. On success table.t_cert() becomes T.
///
/// Requires T >= 10 and, for a non-empty table, a last ordinate above T.
/// Throws CertificationFailed carrying the first window of heights where the
/// counts disagree.
CertificationReport turing_certify(ZeroTable& table, double T);

struct ComputeOptions {
  double tolerance = kDefaultTolerance;
  ScanOptions scan;
};

/// Scans [t_lo, t_hi], refines every bracket, and merges the results into a
/// table whose first record has index first_index. Deterministic for any
/// worker count.
ZeroTable compute_zeros(double t_lo, double t_hi, long first_index = 1,
                        const ComputeOptions& options = {});

/// Confirms a sign change of Z across each record's error interval and sets
/// sign_change_verified accordingly. Returns the number of records that
/// could not be verified.
long verify_sign_changes(ZeroTable& table);

}  // namespace zetagap::zeros
