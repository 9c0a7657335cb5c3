#include "zetagap/zero_finder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "zetagap/counting.hpp"
#include "zetagap/detail/zeta_internal.hpp"
#include "zetagap/errors.hpp"
#include "zetagap/parallel.hpp"
#include "zetagap/zeta_eval.hpp"

namespace zetagap::zeros {
namespace {

constexpr double kPi = std::numbers::pi;

// theta has its minimum near t = 6.29; Gram points live to the right of it.
constexpr double kThetaMinimum = 6.2898;

// Precision ladder used to decide the sign of Z: cheap first, then the
// Euler-Maclaurin path at the finest radii it can certify.
constexpr zeta::Precision kLadder[] = {
    {1e-6, zeta::Method::riemann_siegel},
    zeta::kFinePrecision,
    {2e-11, zeta::Method::euler_maclaurin},
};

struct SignedValue {
  int sign = 0;
  double value = 0.0;
};

SignedValue evaluate(double t) {
  double last = 0.0;
  for (const auto& prec : kLadder) {
    try {
      const auto z = zeta::hardy_Z(t, prec);
      last = z.value;
      if (std::fabs(z.value) > z.err_radius) return {z.value > 0.0 ? 1 : -1, z.value};
    } catch (const PrecisionUnreachable&) {
      // try the next rung
    }
  }
  return {0, last};
}

double lambert_w(double x) {
  double w = (x < 1.0) ? std::log1p(x) : std::log(x) - std::log(std::log(x) + 1.0);
  for (int i = 0; i < 50; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
    const double step = f / denom;
    w -= step;
    if (std::fabs(step) <= 1e-15 * (1.0 + std::fabs(w))) break;
  }
  return w;
}

struct GridPoint {
  double t = 0.0;
  int sign = 0;
  long gram_index = 0;
  bool is_gram = false;
};

int sign_with_nudge(double& t) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    const int s = evaluate(t).sign;
    if (s != 0) return s;
    t += 1e-7;
  }
  throw PrecisionUnreachable("cannot resolve the sign of Z near " + std::to_string(t));
}

void evaluate_signs(std::vector<GridPoint>& points) {
  parallel_for(points.size(), [&](std::size_t i) {
    points[i].sign = sign_with_nudge(points[i].t);
  });
}

long count_sign_changes(const std::vector<GridPoint>& pts, std::size_t a, std::size_t b) {
  long changes = 0;
  for (std::size_t i = a; i < b; ++i) {
    if (pts[i].sign != pts[i + 1].sign) ++changes;
  }
  return changes;
}

// Replaces the interior of pts[a..b] by a grid refined `factor` times.
std::vector<GridPoint> refine_block(const std::vector<GridPoint>& block, int factor) {
  std::vector<GridPoint> added;
  for (std::size_t i = 0; i + 1 < block.size(); ++i) {
    const double lo = block[i].t;
    const double hi = block[i + 1].t;
    for (int j = 1; j < factor; ++j) {
      GridPoint p;
      p.t = lo + (hi - lo) * j / factor;
      added.push_back(p);
    }
  }
  evaluate_signs(added);
  std::vector<GridPoint> out;
  out.reserve(block.size() + added.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < block.size(); ++i) {
    out.push_back(block[i]);
    if (i + 1 < block.size()) {
      for (int j = 1; j < factor; ++j) out.push_back(added[k++]);
    }
  }
  return out;
}

}  // namespace

int certified_sign(double t) { return evaluate(t).sign; }

double gram_point(long n) {
  if (n < -1) throw PreconditionError("gram_point requires n >= -1");
  const long double target = static_cast<long double>(n) * std::numbers::pi_v<long double>;
  const double x = (8.0 * n + 1.0) / (8.0 * std::numbers::e);
  double t = std::max(2.0 * kPi * std::exp(1.0 + lambert_w(x)), kThetaMinimum + 0.5);
  for (int iter = 0; iter < 50; ++iter) {
    const long double f = zeta::detail::theta_long(t) - target;
    const double fp = zeta::theta_derivative(t);
    double next = t - static_cast<double>(f) / fp;
    if (!(next > kThetaMinimum)) next = 0.5 * (t + kThetaMinimum);
    const double step = std::fabs(next - t);
    t = next;
    if (step <= 4e-16 * t) {
      return t;
    }
  }
  throw ConvergenceFailure("Gram point " + std::to_string(n) + " did not converge");
}

std::vector<Bracket> scan_zeros(double t_lo, double t_hi, const ScanOptions& options) {
  if (!(t_lo >= 0.0)) throw PreconditionError("scan_zeros requires t_lo >= 0");
  if (!(t_hi > t_lo)) return {};
  if (t_hi > zeta::kMaxHeight) throw DomainError("scan range exceeds supported height");
  if (options.subdivision < 2 || options.max_depth < 0) {
    throw PreconditionError("invalid scan options");
  }

  // First Gram index strictly above t_lo.
  long n = -1;
  if (t_lo > gram_point(-1)) {
    n = static_cast<long>(std::floor(zeta::theta(t_lo) / kPi)) + 1;
    while (n > -1 && gram_point(n - 1) > t_lo) --n;
    while (gram_point(n) <= t_lo) ++n;
  }

  std::vector<GridPoint> pts;
  pts.push_back({t_lo, 0, 0, false});
  for (;; ++n) {
    const double g = gram_point(n);
    if (!(g < t_hi)) break;
    pts.push_back({g, 0, n, true});
  }
  pts.push_back({t_hi, 0, 0, false});
  evaluate_signs(pts);

  auto good = [](const GridPoint& p) {
    if (!p.is_gram) return false;
    const int parity = (p.gram_index % 2 == 0) ? 1 : -1;
    return parity * p.sign > 0;
  };

  // Walk Gram blocks; splice refined blocks into the output grid.
  std::vector<GridPoint> grid;
  grid.reserve(pts.size());
  std::size_t block_start = 0;
  grid.push_back(pts[0]);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const bool closes_block = good(pts[i]) || i + 1 == pts.size();
    if (!closes_block) continue;
    std::vector<GridPoint> block(pts.begin() + block_start, pts.begin() + i + 1);
    const bool anchored = good(pts[block_start]) && good(pts[i]);
    if (anchored) {
      const long expected = pts[i].gram_index - pts[block_start].gram_index;
      for (int depth = 0; depth < options.max_depth &&
                          count_sign_changes(block, 0, block.size() - 1) < expected;
           ++depth) {
        block = refine_block(block, options.subdivision);
      }
    }
    grid.insert(grid.end(), block.begin() + 1, block.end());
    block_start = i;
  }

  std::vector<Bracket> out;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (grid[i].sign != grid[i + 1].sign) {
      out.push_back({grid[i].t, grid[i + 1].t, grid[i].sign, grid[i + 1].sign});
    }
  }
  return out;
}

ZeroRecord refine_zero(const Bracket& bracket, double tol, long index) {
  if (!(tol >= 1e-12)) throw PreconditionError("refine_zero requires tol >= 1e-12");
  if (!bracket.valid()) throw PreconditionError("refine_zero requires a sign-change bracket");

  double lo = bracket.lo;
  double hi = bracket.hi;
  auto ends_lo = evaluate(lo);
  auto ends_hi = evaluate(hi);
  if (ends_lo.sign == 0 || ends_hi.sign == 0 || ends_lo.sign == ends_hi.sign) {
    throw PreconditionError("bracket endpoints do not show a certified sign change");
  }
  const int sign_lo = ends_lo.sign;
  double f_lo = ends_lo.value;
  double f_hi = ends_hi.value;

  auto finish = [&](double a, double b) {
    ZeroRecord r;
    r.index = index;
    r.ordinate = 0.5 * (a + b);
    r.err_radius = std::max(0.5 * (b - a), r.ordinate - a);
    r.source = ZeroSource::computed;
    r.sign_change_verified = true;
    return r;
  };

  // The sign of Z is unresolved at x: the zero is within the evaluation
  // noise of x. Close the bracket with two probes.
  auto close_around = [&](double x) -> ZeroRecord {
    const double half = 0.45 * tol;
    const double a = std::max(lo, x - half);
    const double b = std::min(hi, x + half);
    const int sa = (a == lo) ? sign_lo : evaluate(a).sign;
    const int sb = (b == hi) ? -sign_lo : evaluate(b).sign;
    if (sa == sign_lo && sb == -sign_lo) return finish(a, b);
    throw PrecisionUnreachable("cannot resolve the zero near " + std::to_string(x) +
                               " to tolerance " + std::to_string(tol));
  };

  // Bisection down to 1000 tol.
  while (hi - lo > 1000.0 * tol) {
    const double mid = 0.5 * (lo + hi);
    const auto e = evaluate(mid);
    if (e.sign == 0) return close_around(mid);
    if (e.sign == sign_lo) {
      lo = mid;
      f_lo = e.value;
    } else {
      hi = mid;
      f_hi = e.value;
    }
  }

  // Illinois false position, bisecting when the width fails to halve.
  int side = 0;
  double last_width = hi - lo;
  int stalled = 0;
  for (int iter = 0; iter < 200 && hi - lo > 2.0 * tol; ++iter) {
    double x = (stalled >= 2) ? 0.5 * (lo + hi) : lo - f_lo * (hi - lo) / (f_hi - f_lo);
    const double guard = 0.25 * tol;
    if (!(x > lo + guard && x < hi - guard)) x = 0.5 * (lo + hi);
    const auto e = evaluate(x);
    if (e.sign == 0) return close_around(x);
    if (e.sign == sign_lo) {
      lo = x;
      f_lo = e.value;
      if (side == -1) f_hi *= 0.5;
      side = -1;
    } else {
      hi = x;
      f_hi = e.value;
      if (side == 1) f_lo *= 0.5;
      side = 1;
    }
    // A secant point next to the root leaves one end far away; probing just
    // past it usually collapses the bracket in one step.
    if (hi - lo > 2.0 * tol && stalled < 2) {
      const double probe = (side == -1) ? lo + 0.9 * tol : hi - 0.9 * tol;
      if (probe > lo && probe < hi) {
        const auto p = evaluate(probe);
        if (p.sign == 0) return close_around(probe);
        if (p.sign == sign_lo) {
          lo = probe;
          f_lo = p.value;
        } else {
          hi = probe;
          f_hi = p.value;
        }
      }
    }
    const double width = hi - lo;
    stalled = (width > 0.5 * last_width) ? stalled + 1 : 0;
    if (stalled > 2) stalled = 0;
    last_width = width;
  }
  if (hi - lo > 2.0 * tol) {
    throw PrecisionUnreachable("refinement did not reach tolerance " + std::to_string(tol));
  }
  return finish(lo, hi);
}

CertificationReport turing_certify(ZeroTable& table, double T) {
  if (!(T >= 10.0)) throw PreconditionError("turing_certify requires T >= 10");
  if (!table.empty() && !(table.back().ordinate > T)) {
    throw PreconditionError("the zero table must extend above the certification height");
  }

  const std::size_t below = table.count_at_most(T);
  std::vector<double> heights;
  if (below >= 2) {
    const std::size_t stride = std::max<std::size_t>(1, below / 32);
    for (std::size_t i = stride - 1; i + 1 < below; i += stride) {
      const double mid = 0.5 * (table[i].ordinate + table[i + 1].ordinate);
      if (mid >= 10.0) heights.push_back(mid);
    }
  }
  heights.push_back(T);

  std::vector<CountSample> samples(heights.size());
  parallel_for(heights.size(), [&](std::size_t i) {
    CountSample s;
    s.T = heights[i];
    s.located = static_cast<long>(table.count_at_most(s.T));
    s.formula_value = counting::n_main(s.T) + counting::s_of_T(s.T);
    s.formula_count = std::lround(s.formula_value);
    samples[i] = s;
  });

  double window_lo = 0.0;
  for (const auto& s : samples) {
    // The O(1/T) term is given allowance 1/T; a value that close to a
    // half-integer cannot be rounded with confidence.
    const double frac = std::fabs(s.formula_value - static_cast<double>(s.formula_count));
    const bool ambiguous = frac > 0.5 - 1.0 / s.T;
    if (s.located != s.formula_count || ambiguous) {
      table.set_certification(0.0, s.located - s.formula_count);
      throw CertificationFailed(
          "zero count mismatch in window [" + std::to_string(window_lo) + ", " +
              std::to_string(s.T) + "]: located " + std::to_string(s.located) +
              ", formula " + std::to_string(s.formula_value),
          window_lo, s.T, s.located, s.formula_count);
    }
    window_lo = s.T;
  }

  const auto& last = samples.back();
  CertificationReport report;
  report.T = T;
  report.located = last.located;
  report.formula_value = last.formula_value;
  report.formula_count = last.formula_count;
  report.discrepancy = last.located - last.formula_count;
  report.samples = std::move(samples);
  table.set_certification(T, 0);
  return report;
}

ZeroTable compute_zeros(double t_lo, double t_hi, long first_index,
                        const ComputeOptions& options) {
  const auto brackets = scan_zeros(t_lo, t_hi, options.scan);
  std::vector<ZeroRecord> records(brackets.size());
  parallel_for(brackets.size(), [&](std::size_t i) {
    records[i] = refine_zero(brackets[i], options.tolerance, first_index + static_cast<long>(i));
  });
  return ZeroTable(std::move(records));
}

long verify_sign_changes(ZeroTable& table) {
  std::vector<ZeroRecord> records(table.records().begin(), table.records().end());
  parallel_for(records.size(), [&](std::size_t i) {
    auto& r = records[i];
    const int a = certified_sign(r.lo());
    const int b = certified_sign(r.hi());
    r.sign_change_verified = (a != 0 && b != 0 && a != b);
  });
  const long failures = static_cast<long>(std::count_if(
      records.begin(), records.end(), [](const ZeroRecord& r) { return !r.sign_change_verified; }));
  const double t_cert = table.t_cert();
  const long check = table.count_formula_check();
  table = ZeroTable(std::move(records), t_cert, check);
  return failures;
}

}  // namespace zetagap::zeros
