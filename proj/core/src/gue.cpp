#include "zetagap/gue.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/legendre.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <tuple>

#include "zetagap/counting.hpp"
#include "zetagap/errors.hpp"
#include "zetagap/parallel.hpp"

namespace zetagap::gue {
namespace {

using Real = long double;
using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

constexpr Real kPiL = std::numbers::pi_v<long double>;
constexpr double kPi = std::numbers::pi;
constexpr double kTailLo = 3.5;
constexpr int kTailPoints = 16;

// Gauss-Legendre rule mapped to [0, 1].
struct Rule {
  std::vector<Real> x;
  std::vector<Real> sqrt_w;
};

const Rule& rule_for(int order) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<Rule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) {
    auto rule = std::make_unique<Rule>();
    const auto zeros = boost::math::legendre_p_zeros<Real>(order);
    std::vector<Real> nodes;
    for (Real z : zeros) {
      nodes.push_back(z);
      if (z != 0) nodes.push_back(-z);
    }
    std::sort(nodes.begin(), nodes.end());
    for (Real z : nodes) {
      const Real dp = boost::math::legendre_p_prime(order, z);
      const Real w = 2 / ((1 - z * z) * dp * dp);
      rule->x.push_back((z + 1) / 2);
      rule->sqrt_w.push_back(std::sqrt(w / 2));
    }
    slot = std::move(rule);
  }
  return *slot;
}

void require_order(int order) {
  if (order < 10) throw PreconditionError("Fredholm discretization needs order >= 10");
}

// Entries of the discretized operator and its first two s-derivatives.
// With d = x_i - x_j, g(s) = sin(pi s d)/(pi d) (and g = s on the diagonal).
struct Discretized {
  Matrix a;
  Matrix da;
  Matrix d2a;
};

Discretized discretize(Real s, int order, bool derivatives) {
  const Rule& r = rule_for(order);
  const int n = order;
  Discretized out;
  out.a.resize(n, n);
  if (derivatives) {
    out.da.resize(n, n);
    out.d2a.resize(n, n);
  }
  // The kernel is symmetric in (i, j); fill the upper triangle and mirror.
  for (int i = 0; i < n; ++i) {
    const Real wi = r.sqrt_w[i];
    out.a(i, i) = wi * wi * s;
    if (derivatives) {
      out.da(i, i) = wi * wi;
      out.d2a(i, i) = 0;
    }
    for (int j = i + 1; j < n; ++j) {
      const Real ww = wi * r.sqrt_w[j];
      const Real d = r.x[i] - r.x[j];
      const Real phase = kPiL * s * d;
      const Real sn = std::sin(phase);
      out.a(i, j) = out.a(j, i) = ww * sn / (kPiL * d);
      if (derivatives) {
        out.da(i, j) = out.da(j, i) = ww * std::cos(phase);
        out.d2a(i, j) = out.d2a(j, i) = -ww * kPiL * d * sn;
      }
    }
  }
  return out;
}

Real determinant(Real s, int order) {
  const auto disc = discretize(s, order, false);
  const Matrix m = Matrix::Identity(order, order) - disc.a;
  return Eigen::PartialPivLU<Matrix>(m).determinant();
}

struct Derivatives {
  Real e = 0;
  Real e1 = 0;
  Real e2 = 0;
};

Derivatives spectral_derivatives(Real s, int order) {
  const auto disc = discretize(s, order, true);
  const Matrix m = Matrix::Identity(order, order) - disc.a;
  Eigen::PartialPivLU<Matrix> lu(m);
  const Real e = lu.determinant();
  const Matrix r1 = lu.solve(disc.da);
  const Matrix r2 = lu.solve(disc.d2a);
  const Real l1 = -r1.trace();
  const Real l2 = -r2.trace() - (r1 * r1).trace();
  return {e, e * l1, e * (l2 + l1 * l1)};
}

// Richardson combination of the 5-point second differences with steps h and
// 2h; the two stencils share the centre and the points u +- 2h.
Real extrapolated_second_difference(Real u, Real h, int order) {
  const Real f0 = determinant(u, order);
  const Real p1 = determinant(u + h, order);
  const Real m1 = determinant(u - h, order);
  const Real p2 = determinant(u + 2 * h, order);
  const Real m2 = determinant(u - 2 * h, order);
  const Real p4 = determinant(u + 4 * h, order);
  const Real m4 = determinant(u - 4 * h, order);
  const Real d1 = (-p2 + 16 * p1 - 30 * f0 + 16 * m1 - m2) / (12 * h * h);
  const Real d2 = (-p4 + 16 * p2 - 30 * f0 + 16 * m2 - m4) / (48 * h * h);
  return (16 * d1 - d2) / 15;
}

double tail_integral(const TailFit& fit, double k, double from) {
  const double upper = std::sqrt(from * from + 60.0 / fit.b);
  auto f = [&](double u) { return std::pow(u, k) * std::exp(fit.a - fit.b * u * u); };
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, from, upper, 10, 1e-14);
}

// Integral of exp(a - b t^2) over [u, inf).
double tail_mass(const TailFit& fit, double u) {
  const double rb = std::sqrt(fit.b);
  return std::exp(fit.a) * std::sqrt(kPi) / (2.0 * rb) * std::erfc(rb * u);
}

}  // namespace

double fredholm_E(double s, int order) {
  require_order(order);
  if (s == 0.0) return 1.0;
  return static_cast<double>(determinant(s, order));
}

double gaudin_p(double u, int order) {
  require_order(order);
  if (!(u >= 0.0)) throw PreconditionError("gaudin_p requires u >= 0");
  if (u == 0.0) return 0.0;
  return static_cast<double>(extrapolated_second_difference(u, kStencilStep, order));
}

double gaudin_p_spectral(double u, int order) {
  require_order(order);
  if (u == 0.0) return 0.0;
  return static_cast<double>(spectral_derivatives(u, order).e2);
}

double fredholm_E_prime(double s, int order) {
  require_order(order);
  return static_cast<double>(spectral_derivatives(s, order).e1);
}

TailFit fit_tail(int order) {
  // Weighted least squares for log p = a - b u^2 with weights p^2, so the
  // fit follows absolute rather than relative residuals where p is tiny.
  double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  int used = 0;
  for (int i = 0; i < kTailPoints; ++i) {
    const double u = kTailLo + (kUMax - kTailLo) * i / (kTailPoints - 1);
    const double p = gaudin_p(u, order);
    if (!(p > 0.0)) continue;
    const double w = p * p;
    const double x = u * u;
    const double y = std::log(p);
    sw += w;
    sx += w * x;
    sy += w * y;
    sxx += w * x * x;
    sxy += w * x * y;
    ++used;
  }
  if (used < 3) throw TailFitError("too few positive samples of p on the tail interval");
  const double denom = sw * sxx - sx * sx;
  const double slope = (sw * sxy - sx * sy) / denom;
  TailFit fit;
  fit.b = -slope;
  fit.a = (sy - slope * sx) / sw;
  if (!(fit.b > 0.0)) throw TailFitError("fitted tail exponent is not negative");
  return fit;
}

MomentValue c1_with_error(double k, double tol, int order) {
  if (!(k > -1.0)) throw PreconditionError("c1(k) requires k > -1");
  require_order(order);
  static std::mutex mutex;
  static std::map<std::tuple<double, double, int>, MomentValue> memo;
  static std::map<int, TailFit> tails;
  const auto key = std::make_tuple(k, tol, order);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  TailFit fit;
  {
    std::unique_lock lock(mutex);
    auto it = tails.find(order);
    if (it == tails.end()) {
      lock.unlock();
      fit = fit_tail(order);
      lock.lock();
      tails.emplace(order, fit);
    } else {
      fit = it->second;
    }
  }
  auto integrand = [&](double u) { return u == 0.0 ? 0.0 : std::pow(u, k) * gaudin_p(u, order); };
  double err = 0.0;
  const double body = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      integrand, 0.0, kUMax, 12, tol, &err);
  MomentValue m;
  m.tail = tail_integral(fit, k, kUMax);
  m.value = body + m.tail;
  m.err_estimate = err + m.tail;
  std::lock_guard lock(mutex);
  memo.emplace(key, m);
  return m;
}

double c1(double k, double tol, int order) { return c1_with_error(k, tol, order).value; }

double GaudinTable::cdf(double u) const {
  if (u_grid.empty()) return 0.0;
  if (u <= 0.0) return 0.0;
  const double u_max = u_grid.back();
  if (u >= u_max) return cdf_values.back() + tail_mass(tail, u_max) - tail_mass(tail, u);
  const double pos = u / step;
  const auto i = std::min(static_cast<std::size_t>(pos), u_grid.size() - 2);
  const double frac = (u - u_grid[i]) / step;
  return cdf_values[i] + frac * (cdf_values[i + 1] - cdf_values[i]);
}

double GaudinTable::quantile(double q) const {
  if (!(q >= 0.0 && q < 1.0)) throw PreconditionError("quantile requires q in [0, 1)");
  if (q >= cdf_values.back()) return u_grid.back();
  const auto it = std::lower_bound(cdf_values.begin(), cdf_values.end(), q);
  const auto i = static_cast<std::size_t>(it - cdf_values.begin());
  if (i == 0) return 0.0;
  const double c0 = cdf_values[i - 1];
  const double c1v = cdf_values[i];
  const double frac = (c1v > c0) ? (q - c0) / (c1v - c0) : 0.0;
  return u_grid[i - 1] + frac * step;
}

double GaudinTable::mass(double alpha, double beta) const {
  if (!(beta > alpha)) return 0.0;
  return cdf(beta) - cdf(alpha);
}

GaudinTable build_gaudin_table(double u_max, double step, int order) {
  require_order(order);
  if (!(u_max > 0.0) || !(step > 0.0) || step > u_max) {
    throw PreconditionError("Gaudin table needs 0 < step <= u_max");
  }
  const auto n = static_cast<std::size_t>(std::llround(u_max / step));
  GaudinTable t;
  t.quad_order = order;
  t.step = u_max / static_cast<double>(n);
  t.u_grid.resize(n + 1);
  t.e_values.resize(n + 1);
  t.p_values.resize(n + 1);
  t.cdf_values.assign(n + 1, 0.0);
  std::vector<double> p_mid(n);
  std::vector<double> cross_check(n + 1);
  for (std::size_t i = 0; i <= n; ++i) t.u_grid[i] = t.step * static_cast<double>(i);
  parallel_for(n + 1, [&](std::size_t i) {
    const double u = t.u_grid[i];
    t.e_values[i] = fredholm_E(u, order);
    t.p_values[i] = gaudin_p(u, order);
    cross_check[i] = 1.0 + fredholm_E_prime(u, order);
    if (i < n) p_mid[i] = gaudin_p(u + 0.5 * t.step, order);
  });
  // Simpson's rule per cell; running maximum keeps the CDF monotone when p
  // dips into its noise floor.
  double acc = 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += t.step / 6.0 * (t.p_values[i] + 4.0 * p_mid[i] + t.p_values[i + 1]);
    t.cdf_values[i + 1] = std::max(acc, t.cdf_values[i]);
  }
  for (std::size_t i = 0; i <= n; ++i) {
    worst = std::max(worst, std::fabs(t.cdf_values[i] - cross_check[i]));
  }
  t.tol = worst;
  t.tail = fit_tail(order);
  return t;
}

void write_csv(const GaudinTable& table, std::ostream& out) {
  out << "u,E,p,cdf\n";
  char buf[160];
  for (std::size_t i = 0; i < table.u_grid.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.6f,%.17g,%.17g,%.17g\n", table.u_grid[i], table.e_values[i],
                  table.p_values[i], table.cdf_values[i]);
    out << buf;
  }
}

GuePrediction predicted_moment(double k, double T, std::optional<double> n_count, int order) {
  if (!(k >= 0.0)) throw PreconditionError("predicted_moment requires k >= 0");
  if (!(T > 2.0 * kPi * std::exp(2.0))) {
    throw PreconditionError("predicted_moment requires T > 2 pi e^2");
  }
  GuePrediction p;
  p.k = k;
  p.T = T;
  p.c1_k = c1(k, 1e-9, order);
  const double lt = std::log(T / (2.0 * kPi));
  const double mean_gap = 2.0 * kPi / (lt - 1.0);
  p.predicted_S_k = p.c1_k * std::pow(mean_gap, k - 1.0) * T;
  p.n_used = n_count.value_or(counting::n_main(T));
  p.predicted_S_k_n = p.c1_k * std::pow(mean_gap, k) * p.n_used;
  p.form_ratio = p.predicted_S_k / p.predicted_S_k_n;
  const double log_t = std::log(T);
  p.max_gap_pred = 8.0 / std::sqrt(2.0 * log_t);
  p.dm_shape = 1.0 / std::sqrt(log_t * std::log(log_t));
  return p;
}

double predicted_count(const GaudinTable& table, double alpha, double beta, double T) {
  const double x = T / (2.0 * kPi);
  return table.mass(alpha, beta) * x * std::log(x);
}

double empirical_proportion(std::span<const double> spacings, double alpha, double beta) {
  if (spacings.empty() || !(beta > alpha)) return 0.0;
  const auto hits = std::count_if(spacings.begin(), spacings.end(),
                                  [&](double d) { return d >= alpha && d <= beta; });
  return static_cast<double>(hits) / static_cast<double>(spacings.size());
}

double ks_distance(std::span<const double> spacings, const GaudinTable& table) {
  std::vector<double> sorted(spacings.begin(), spacings.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = table.cdf(sorted[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

HistogramComparison compare_histogram(std::span<const double> spacings, int bins,
                                      const GaudinTable& table) {
  if (bins < 20) throw PreconditionError("histogram comparison needs at least 20 bins");
  if (spacings.size() < 1000) {
    throw TooFewSamples("histogram comparison needs at least 1000 spacings, got " +
                        std::to_string(spacings.size()));
  }
  HistogramComparison out;
  out.samples = spacings.size();
  const double u_max = table.u_grid.back();
  const double width = u_max / bins;
  out.bins.resize(static_cast<std::size_t>(bins));
  for (int b = 0; b < bins; ++b) {
    auto& bin = out.bins[static_cast<std::size_t>(b)];
    bin.lo = width * b;
    bin.hi = (b + 1 == bins) ? u_max : width * (b + 1);
    const double upper = (b + 1 == bins) ? table.cdf(1e3) : table.cdf(bin.hi);
    bin.predicted_mass = upper - table.cdf(bin.lo);
  }
  for (double d : spacings) {
    auto b = static_cast<long>(std::floor(d / width));
    b = std::clamp<long>(b, 0, bins - 1);
    ++out.bins[static_cast<std::size_t>(b)].observed;
  }
  const double n = static_cast<double>(out.samples);
  int used = 0;
  for (auto& bin : out.bins) {
    bin.frequency = static_cast<double>(bin.observed) / n;
    const double expected = bin.predicted_mass * n;
    if (expected > 0.0) {
      const double diff = static_cast<double>(bin.observed) - expected;
      out.chi_square += diff * diff / expected;
      ++used;
    }
  }
  out.degrees_of_freedom = std::max(used - 1, 0);
  out.ks_distance = ks_distance(spacings, table);
  return out;
}

std::vector<double> sample_spacings(std::size_t n, std::uint64_t seed, const GaudinTable& table) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> out(n);
  for (auto& x : out) x = table.quantile(uniform(rng));
  return out;
}

SeriesReport series_report(int order) {
  SeriesReport r;
  r.ratio_002 = gaudin_p(0.02, order) / (0.02 * 0.02);
  r.ratio_004 = gaudin_p(0.04, order) / (0.04 * 0.04);
  r.ratio_008 = gaudin_p(0.08, order) / (0.08 * 0.08);
  // p/u^2 = c0 + c1 u^2 + ...; eliminate the u^2 term.
  r.measured_limit = (4.0 * r.ratio_002 - r.ratio_004) / 3.0;
  r.coefficient_pi_cubed = kPi * kPi * kPi / 3.0;
  r.coefficient_pi_squared = kPi * kPi / 3.0;
  r.tail_b = fit_tail(order).b;
  r.tail_pi_squared_over_8 = kPi * kPi / 8.0;
  return r;
}

std::vector<BoundCheck> max_gap_checks(double max_gap, double T) {
  const double log_t = std::log(T);
  const double odlyzko = 8.0 / std::sqrt(2.0 * log_t);
  const double dm = 1.0 / std::sqrt(log_t * std::log(log_t));
  return {
      report_check("2.7", T, max_gap, odlyzko, {{"ratio", max_gap / odlyzko}},
                   "max gap against 8/sqrt(2 log T)"),
      report_check("2.8", T, max_gap, dm, {{"ratio", max_gap / dm}},
                   "max gap against 1/sqrt(log T log log T), implied constant taken as 1"),
  };
}

std::vector<BoundCheck> moment_checks(const GuePrediction& p, double measured) {
  return {
      report_check("3.3", p.T, measured, p.predicted_S_k,
                   {{"k", p.k}, {"c1", p.c1_k}, {"ratio", measured / p.predicted_S_k}},
                   "measured S_k(T) against c1(k) (2pi/(log(T/2pi)-1))^(k-1) T"),
      report_check("4.2", p.T, measured, p.predicted_S_k_n,
                   {{"k", p.k}, {"c1", p.c1_k}, {"N", p.n_used},
                    {"ratio", measured / p.predicted_S_k_n}},
                   "measured S_k(T) against c1(k) (2pi/(log(T/2pi)-1))^k N(T)"),
  };
}

}  // namespace zetagap::gue
