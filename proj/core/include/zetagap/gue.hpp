#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "zetagap/bound_check.hpp"

namespace zetagap::gue {

inline constexpr int kDefaultOrder = 40;
inline constexpr double kUMax = 5.0;
inline constexpr double kStencilStep = 1e-3;

/// E(s) = det(I - K) for the sine kernel sin(pi(x-y))/(pi(x-y)) on [0, s],
/// by Gauss-Legendre Nystrom discretization with `order` nodes. Negative s
/// gives the analytic continuation of the discretized determinant, which the
/// difference stencils in gaudin_p need near 0. Requires order >= 10.
double fredholm_E(double s, int order = kDefaultOrder);

/// p(0,u) = E''(u): 5-point central difference with step 1e-3, combined
/// with the step-2e-3 difference by one Richardson extrapolation.
double gaudin_p(double u, int order = kDefaultOrder);

/// E''(u) from the exact derivatives of the discretized determinant
/// (trace formulas). An independent route used to check gaudin_p.
double gaudin_p_spectral(double u, int order = kDefaultOrder);

/// E'(s) by the same trace formula. 1 + E'(u) is the Gaudin CDF, which
/// cross-checks the cumulative integral of p.
double fredholm_E_prime(double s, int order = kDefaultOrder);

/// log p(0,u) ~ a - b u^2 fitted on [3.5, 5].
struct TailFit {
  double a = 0.0;
  double b = 0.0;
};
TailFit fit_tail(int order = kDefaultOrder);

struct MomentValue {
  double value = 0.0;
  double err_estimate = 0.0;  // quadrature error estimate plus the tail mass
  double tail = 0.0;          // contribution of the fitted tail beyond 5
};

/// c1(k) = integral of u^k p(0,u) over [0, inf): adaptive Gauss-Kronrod on
/// [0, 5] plus the fitted Gaussian tail. Memoized per (k, tol, order).
/// Requires k > -1; throws TailFitError if the fitted b is not positive.
MomentValue c1_with_error(double k, double tol = 1e-9, int order = kDefaultOrder);
double c1(double k, double tol = 1e-9, int order = kDefaultOrder);

/// Tabulated E, p and the CDF (cumulative integral of p) on a uniform grid.
struct GaudinTable {
  std::vector<double> u_grid;
  std::vector<double> e_values;
  std::vector<double> p_values;
  std::vector<double> cdf_values;
  int quad_order = kDefaultOrder;
  double tol = 0.0;
  double step = 0.0;
  TailFit tail;

  /// CDF at u by linear interpolation; the fitted tail beyond the grid.
  double cdf(double u) const;
  /// Smallest u with cdf(u) >= q, for q in [0, 1).
  double quantile(double q) const;
  /// Integral of p over [alpha, beta].
  double mass(double alpha, double beta) const;
};

GaudinTable build_gaudin_table(double u_max = kUMax, double step = 0.02,
                               int order = kDefaultOrder);

/// Columns u,E,p,cdf; one row per grid point.
void write_csv(const GaudinTable& table, std::ostream& out);

struct GuePrediction {
  double k = 0.0;
  double T = 0.0;
  double c1_k = 0.0;
  double predicted_S_k = 0.0;      // c1(k) (2pi/(log(T/2pi)-1))^(k-1) T
  double predicted_S_k_n = 0.0;    // c1(k) (2pi/(log(T/2pi)-1))^k N
  double n_used = 0.0;             // N in the second form
  double form_ratio = 0.0;         // predicted_S_k / predicted_S_k_n
  double max_gap_pred = 0.0;       // 8 / sqrt(2 log T)
  double dm_shape = 0.0;           // 1 / sqrt(log T log log T), constant 1
};

/// Both moment predictions at height T. N defaults to the main term of the
/// zero-counting formula. Requires k >= 0 and T > 2 pi e^2.
GuePrediction predicted_moment(double k, double T, std::optional<double> n_count = {},
                               int order = kDefaultOrder);

/// Expected number of n with gamma_n <= T and delta_n in [alpha, beta]:
/// mass(alpha, beta) (T/2pi) log(T/2pi).
double predicted_count(const GaudinTable& table, double alpha, double beta, double T);

/// Fraction of the spacings that fall in [alpha, beta].
double empirical_proportion(std::span<const double> spacings, double alpha, double beta);

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t observed = 0;
  double frequency = 0.0;      // observed / samples
  double predicted_mass = 0.0;  // Gaudin mass of the bin; the last bin takes the tail
};

struct HistogramComparison {
  std::vector<HistogramBin> bins;
  std::size_t samples = 0;
  double chi_square = 0.0;
  int degrees_of_freedom = 0;
  double ks_distance = 0.0;
};

/// Bins [0, table u_max] into equal widths and compares with the Gaudin
/// masses. Requires bins >= 20 and at least 1000 spacings (TooFewSamples).
HistogramComparison compare_histogram(std::span<const double> spacings, int bins,
                                      const GaudinTable& table);

/// Kolmogorov-Smirnov distance between the sample and the table CDF.
double ks_distance(std::span<const double> spacings, const GaudinTable& table);

/// Inverse-transform draws from the table CDF.
std::vector<double> sample_spacings(std::size_t n, std::uint64_t seed, const GaudinTable& table);

/// Small-u behaviour of p measured against the two candidate series
/// coefficients, and the fitted tail exponent against pi^2/8.
struct SeriesReport {
  double measured_limit = 0.0;          // p(0,u)/u^2 extrapolated to u = 0
  double ratio_002 = 0.0;               // p/u^2 at u = 0.02, 0.04, 0.08
  double ratio_004 = 0.0;
  double ratio_008 = 0.0;
  double coefficient_pi_cubed = 0.0;    // pi^3 / 3
  double coefficient_pi_squared = 0.0;  // pi^2 / 3
  double tail_b = 0.0;
  double tail_pi_squared_over_8 = 0.0;
};
SeriesReport series_report(int order = kDefaultOrder);

/// Report-only comparisons of the measured maximal gap with 8/sqrt(2 log T)
/// and 1/sqrt(log T log log T).
std::vector<BoundCheck> max_gap_checks(double max_gap, double T);

/// Report-only comparisons of the measured S_k(T) with both predictions.
std::vector<BoundCheck> moment_checks(const GuePrediction& prediction, double measured_s_k);

}  // namespace zetagap::gue
