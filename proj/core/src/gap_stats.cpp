#include "zetagap/gap_stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zetagap/counting.hpp"
#include "zetagap/errors.hpp"
#include "zetagap/gue.hpp"
#include "zetagap/summation.hpp"

namespace zetagap::gaps {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kConstantGap = 1.414;

double log_height(double T) { return std::log(T / kTwoPi); }

long count_for(const ZeroTable& table, std::size_t located) {
  if (located == 0) return table.empty() ? 0 : table.front().index - 1;
  return table[located - 1].index;
}

double power(double d, double k) {
  if (k == 0.0) return 1.0;
  if (k == 1.0) return d;
  if (k == 2.0) return d * d;
  return std::pow(d, k);
}

double sum_below(const GapSequence& seq, double k, double height) {
  CompensatedSum<double> acc;
  for (std::size_t i = 0; i < seq.size() && seq.ordinate[i] <= height; ++i) {
    acc += power(seq.gaps[i], k);
  }
  return acc.value();
}

std::pair<double, double> window_of(const ZeroTable& table, const GapSequence& seq, double k,
                                    double T, int samples) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const double start = std::log(T / 10.0);
  const double span = std::log(10.0);
  for (int i = 0; i < samples; ++i) {
    const double h = std::exp(start + span * i / (samples - 1));
    const double height = (i + 1 == samples) ? T : h;
    const long n = count_for(table, table.count_at_most(height));
    if (n <= 0 || height <= 1.0) continue;
    const double ratio = sum_below(seq, k, height) * std::pow(std::log(height), k) / n;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  if (!(lo <= hi)) return {0.0, 0.0};
  return {lo, hi};
}

std::string conditional_note(const char* what) {
  return std::string("conditional-skipped: assume_rh is false; ") + what;
}

}  // namespace

GapSequence gaps(const ZeroTable& table, double T) {
  if (table.size() < 2) throw PreconditionError("gap statistics need at least two zeros");
  if (!(T <= table.t_cert())) {
    throw UncertifiedRange("height " + std::to_string(T) + " is above the certified height " +
                           std::to_string(table.t_cert()));
  }
  const std::size_t n = table.count_at_most(T);
  if (n >= table.size()) {
    throw UncertifiedRange("the table ends before the first ordinate above " + std::to_string(T));
  }
  GapSequence seq;
  seq.T = T;
  seq.first_ordinate = table.front().ordinate;
  seq.next_ordinate = table[n].ordinate;
  seq.index.reserve(n);
  seq.ordinate.reserve(n);
  seq.gaps.reserve(n);
  seq.normalized.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double g = table[i].ordinate;
    const double d = table[i + 1].ordinate - g;
    seq.index.push_back(table[i].index);
    seq.ordinate.push_back(g);
    seq.gaps.push_back(d);
    seq.normalized.push_back(d * std::log(g / kTwoPi) / kTwoPi);
  }
  return seq;
}

double power_sum(const GapSequence& seq, double k) {
  return sum_below(seq, k, std::numeric_limits<double>::infinity());
}

MomentReport moment_sum(const ZeroTable& table, double k, double T, const MomentOptions& options) {
  const auto seq = gaps(table, T);
  MomentReport r;
  r.k = k;
  r.T = T;
  r.n_count = count_for(table, seq.size());
  r.s_k = (k == 0.0) ? static_cast<double>(r.n_count) : power_sum(seq, k);
  if (r.n_count > 0) r.normalized_ratio = r.s_k * std::pow(std::log(T), k) / r.n_count;
  if (options.with_gue && k >= 0.0 && T > kTwoPi * std::exp(2.0)) {
    r.gue_prediction =
        gue::predicted_moment(k, T, static_cast<double>(r.n_count), options.quad_order)
            .predicted_S_k;
  }
  r.fujii_window = window_of(table, seq, k, T, std::max(options.window_samples, 2));
  return r;
}

std::pair<double, double> fujii_window(const ZeroTable& table, double k, double T, int samples) {
  if (!(k >= 0.0)) throw PreconditionError("fujii_window requires k >= 0");
  if (samples < 2) throw PreconditionError("fujii_window needs at least two sub-heights");
  const auto seq = gaps(table, T);
  return window_of(table, seq, k, T, samples);
}

LargeGapCount count_large_gaps(const ZeroTable& table, double C, double T,
                               const LargeGapOptions& options) {
  if (!(C > 0.0)) throw PreconditionError("count_large_gaps requires C > 0");
  if (!(T > kTwoPi * std::numbers::e)) {
    throw PreconditionError("count_large_gaps requires T > 2 pi e");
  }
  const auto seq = gaps(table, T);
  const double L = log_height(T);
  LargeGapCount r;
  r.C = C;
  r.T = T;
  r.threshold = C / L;
  r.n_count = count_for(table, seq.size());
  r.count = std::count_if(seq.gaps.begin(), seq.gaps.end(),
                          [&](double d) { return d > r.threshold; });
  const double N = static_cast<double>(r.n_count);
  const int samples = std::max(options.window_samples, 2);

  r.lower_bounds["eq_4_9"] =
      (C < kTwoPi) ? T * L / (18.0 * kPi) * std::pow(1.0 - C / kTwoPi, 2) : 0.0;
  const double c1_2 = window_of(table, seq, 2.0, T, samples).first;
  const double c2_4 = window_of(table, seq, 4.0, T, samples).second;
  r.lower_bounds["eq_4_1"] = (C * C < c1_2 && c2_4 > 0.0)
                                 ? std::pow(c1_2 - C * C, 2) / c2_4 * N
                                 : 0.0;
  if (options.c1_2 && options.c1_4) {
    const double a = kTwoPi * kTwoPi * *options.c1_2 - C * C;
    r.lower_bounds["eq_4_3"] = (a > 0.0) ? a * a / (kTwoPi * kTwoPi * *options.c1_4) * N : 0.0;
  }

  const double max_gap =
      seq.gaps.empty() ? 0.0 : *std::max_element(seq.gaps.begin(), seq.gaps.end());
  const double allowance = (seq.first_ordinate + max_gap + 1.0) * L / C;
  r.upper_bounds["eq_5_1"] = kTwoPi / C * N + allowance;
  double best = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= 4; ++k) {
    const double c2 = window_of(table, seq, k, T, samples).second;
    const double bound = c2 / std::pow(C, k) * N;
    r.upper_bounds["eq_5_2_k" + std::to_string(k)] = bound;
    if (bound < best) {
      best = bound;
      r.best_k = k;
    }
  }
  r.upper_bounds["eq_5_2"] = best;
  r.upper_bounds["eq_5_3_shape"] = N * std::exp(-C);
  r.implied_A = (r.count > 0 && N > 0.0) ? -std::log(r.count / N) / C
                                         : std::numeric_limits<double>::infinity();
  return r;
}

ReciprocalReport reciprocal_sum(const ZeroTable& table, double T) {
  const auto seq = gaps(table, T);
  for (std::size_t i = 0; i <= seq.size(); ++i) {
    if (!table[i].sign_change_verified) {
      throw PreconditionError("zero " + std::to_string(table[i].index) +
                              " has no verified sign change");
    }
  }
  const double L = log_height(T);
  ReciprocalReport r;
  r.T = T;
  CompensatedSum<double> h;
  r.min_gap = std::numeric_limits<double>::infinity();
  for (double d : seq.gaps) {
    if (!(d > 0.0)) continue;
    h += 1.0 / d;
    ++r.r_value;
    r.min_gap = std::min(r.min_gap, d);
  }
  r.h_value = h.value();
  r.max_reciprocal = (r.r_value > 0) ? 1.0 / r.min_gap : 0.0;
  if (r.r_value == 0) r.min_gap = 0.0;
  r.bound_6_4 = T * L * L / (25.0 * kPi * kPi);
  r.bound_6_5 = 2.0 / (25.0 * kPi) * L;
  r.bound_6_6 = 25.0 * kPi / (2.0 * L);
  return r;
}

double explicit_gap_bound(double T) {
  if (!(T >= 10.0)) throw PreconditionError("explicit_gap_bound requires T >= 10");
  const double L = log_height(T);
  double H = 1.0;
  for (int i = 0; i < 100; ++i) {
    const double next = kTwoPi * (2.0 * counting::trudgian_bound(T + H) + 2.0 / T) / L;
    if (std::fabs(next - H) <= 1e-14 * next) return next;
    H = next;
  }
  return H;
}

double log_constant_gap_height() {
  // In x = log T, with B(T) ~ B(T + 1.414) at these heights:
  // (1.414/2pi)(x - log 2pi) - 2 (0.112 x + 0.278 log x + 2.510) > 0.
  auto f = [](double x) {
    return kConstantGap / kTwoPi * (x - std::log(kTwoPi)) -
           2.0 * (0.112 * x + 0.278 * std::log(x) + 2.510);
  };
  double lo = 10.0;
  double hi = 1e7;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  return hi;
}

MuLambdaProxy extremes(const ZeroTable& table, double T, const ExtremesOptions& options) {
  if (!(T >= 100.0)) throw PreconditionError("extremes requires T >= 100");
  const auto seq = gaps(table, T);
  const double L = log_height(T);
  MuLambdaProxy r;
  r.T = T;
  r.mu_emp = std::numeric_limits<double>::infinity();
  r.lambda_emp = -r.mu_emp;
  r.min_gap = std::numeric_limits<double>::infinity();
  double theorem1 = 0.0;   // max d_n log log gamma_n
  double hall_hayman = 0.0;  // max d_n log log log gamma_n over gamma_n > e^e
  double worst_ratio = -1.0;
  double worst_gap = 0.0;
  double worst_bound = 0.0;
  double worst_height = 0.0;
  double constant_max = 0.0;
  bool constant_applies = false;
  double high_max = 0.0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const double g = seq.ordinate[i];
    const double d = seq.gaps[i];
    const double delta = seq.normalized[i];
    if (delta < r.mu_emp) {
      r.mu_emp = delta;
      r.mu_index = seq.index[i];
    }
    if (delta > r.lambda_emp) {
      r.lambda_emp = delta;
      r.lambda_index = seq.index[i];
    }
    if (d > r.max_gap) {
      r.max_gap = d;
      r.max_gap_index = seq.index[i];
    }
    if (d < r.min_gap) {
      r.min_gap = d;
      r.min_gap_index = seq.index[i];
    }
    const double llg = std::log(std::log(g));
    theorem1 = std::max(theorem1, d * llg);
    if (llg > 0.0) hall_hayman = std::max(hall_hayman, d * std::log(llg));
    if (g >= options.explicit_gap_height) {
      high_max = std::max(high_max, d);
      const double bound = explicit_gap_bound(g);
      if (d / bound > worst_ratio) {
        worst_ratio = d / bound;
        worst_gap = d;
        worst_bound = bound;
        worst_height = g;
      }
    }
    if (g >= options.constant_gap_height) {
      constant_applies = true;
      constant_max = std::max(constant_max, d);
    }
  }

  auto& c = r.checks;
  c.push_back(verdict_check("2.6", T, kTwoPi / L, r.max_gap, {{"max_gap", r.max_gap}},
                            "max gap >= 2pi/log(T/2pi), the (1+o(1)) factor dropped"));
  c.push_back(report_check("2.6-o1", T, r.max_gap * L / kTwoPi, 1.0, {},
                           "max gap over 2pi/log(T/2pi); the 1+o(1) factor"));
  c.push_back(report_check("2.1", T, theorem1, kPi / 2.0, {},
                           "max of d_n log log gamma_n against pi/2 + o(1)"));
  c.push_back(report_check("1.6", T, hall_hayman, kPi / 2.0, {},
                           "max of d_n log log log gamma_n over gamma_n > e^e; any A > pi/2"));
  c.push_back(report_check("1.7", T, theorem1, 1.0, {},
                           "max of d_n log log gamma_n; implied constant unspecified"));
  c.push_back(report_check("3.4-mu", T, r.mu_emp, 1.0, {{"n", double(r.mu_index)}},
                           "smallest normalized gap"));
  c.push_back(report_check("3.4-lambda", T, 1.0, r.lambda_emp, {{"n", double(r.lambda_index)}},
                           "largest normalized gap"));
  if (worst_ratio >= 0.0) {
    c.push_back(verdict_check("2.4", T, worst_gap, worst_bound,
                              {{"gamma_n", worst_height},
                               {"from_height", options.explicit_gap_height}},
                              "gap against the explicit bound H(gamma_n) from Trudgian's |S| "
                              "estimate; worst n shown"));
  } else {
    c.push_back(report_check("2.4", T, 0.0, 0.0, {{"from_height", options.explicit_gap_height}},
                             "no gaps above the checked height"));
  }
  const double log_t0 = log_constant_gap_height();
  if (constant_applies) {
    c.push_back(verdict_check("2.4-constant", T, constant_max, kConstantGap,
                              {{"from_height", options.constant_gap_height}},
                              "gaps above the configured height against 1.414"));
  } else {
    c.push_back(report_check("2.4-constant", T, high_max, kConstantGap,
                             {{"log_T0", log_t0}},
                             "1.414 is only implied beyond log T = log_T0; largest gap above "
                             "the explicit-bound height shown"));
  }
  return r;
}

std::vector<BoundCheck> telescoping_checks(const ZeroTable& table, double T) {
  const auto seq = gaps(table, T);
  const double s1 = power_sum(seq, 1.0);
  const long n = count_for(table, seq.size());
  const double max_gap =
      seq.gaps.empty() ? 0.0 : *std::max_element(seq.gaps.begin(), seq.gaps.end());
  const double span = seq.next_ordinate - seq.first_ordinate;
  return {
      verdict_check("2.5-telescoping", T, std::fabs(s1 - (seq.size() ? span : 0.0)), 1e-6 * n,
                    {{"S1", s1}, {"N", double(n)}}, "sum of gaps against gamma_{N+1} - gamma_1"),
      verdict_check("2.5", T, std::fabs(s1 - T), seq.first_ordinate + max_gap + 1.0,
                    {{"S1", s1}, {"gamma_1", seq.first_ordinate}, {"max_gap", max_gap}},
                    "|S_1(T) - T| against gamma_1 + max gap + 1"),
  };
}

std::vector<BoundCheck> second_moment_checks(const ZeroTable& table, double T, bool assume_rh) {
  const auto seq = gaps(table, T);
  const double s2 = power_sum(seq, 2.0);
  const double rhs = 9.0 * kTwoPi * T / log_height(T);
  if (assume_rh) {
    return {verdict_check("4.8", T, s2, rhs, {}, "S_2(T) against 9 * 2pi T / log(T/2pi)")};
  }
  return {report_check("4.8", T, s2, rhs, {}, conditional_note("S_2(T) against 9 * 2pi T / log(T/2pi)"))};
}

std::vector<BoundCheck> large_gap_checks(const ZeroTable& table, double C, double T,
                                         bool assume_rh, const LargeGapOptions& options) {
  const auto lg = count_large_gaps(table, C, T, options);
  const auto seq = gaps(table, T);
  const double L = log_height(T);
  const double count = static_cast<double>(lg.count);
  const double N = static_cast<double>(lg.n_count);
  const double s1 = power_sum(seq, 1.0);
  const double s2 = power_sum(seq, 2.0);
  // Splitting S_1 at the threshold and applying Cauchy-Schwarz to the large
  // gaps gives count >= (S_1 - C N / L)^2 / (sum of large d_n^2).
  const double excess = std::max(s1 - C * N / L, 0.0);
  const std::map<std::string, double> cp{{"C", C}};

  std::vector<BoundCheck> out;
  out.push_back(verdict_check("5.1", T, count, lg.upper_bounds.at("eq_5_1"), cp,
                              "(2pi/C) N(T) + (gamma_1 + max gap + 1) log(T/2pi) / C"));
  out.push_back(verdict_check("thm2", T, s2 > 0.0 ? excess * excess / s2 : 0.0, count, cp,
                              "count >= (S_1 - C N/L)^2 / S_2 with measured S_2"));
  const double fujii_s2 = 9.0 * kTwoPi * T / L;
  const std::string rh_note = "count >= (S_1 - C N/L)^2 / (9 * 2pi T / L)";
  if (assume_rh) {
    out.push_back(verdict_check("thm2-rh", T, excess * excess / fujii_s2, count, cp, rh_note));
  } else {
    out.push_back(report_check("thm2-rh", T, excess * excess / fujii_s2, count, cp,
                               conditional_note(rh_note.c_str())));
  }
  out.push_back(report_check("4.9", T, lg.lower_bounds.at("eq_4_9"), count, cp,
                             "T log(T/2pi) (1 - C/2pi)^2 / (18 pi); the O(T) term is unspecified"));
  out.push_back(report_check("4.1", T, lg.lower_bounds.at("eq_4_1"), count, cp,
                             "(C1(2) - C^2)^2 N / C2(4) with empirical window constants"));
  if (auto it = lg.lower_bounds.find("eq_4_3"); it != lg.lower_bounds.end()) {
    out.push_back(report_check("4.3", T, it->second, count, cp,
                               "((2pi)^2 c1(2) - C^2)^2 N / ((2pi)^2 c1(4))"));
  }
  for (int k = 1; k <= 4; ++k) {
    out.push_back(report_check("5.2-k" + std::to_string(k), T, count,
                               lg.upper_bounds.at("eq_5_2_k" + std::to_string(k)),
                               {{"C", C}, {"k", double(k)}},
                               "C2(k) N / C^k with the empirical window maximum"));
  }
  out.push_back(report_check("5.2", T, count, lg.upper_bounds.at("eq_5_2"),
                             {{"C", C}, {"best_k", double(lg.best_k)}}, "best k of 1..4"));
  out.push_back(report_check("5.3", T, count, lg.upper_bounds.at("eq_5_3_shape"),
                             {{"C", C}, {"implied_A", lg.implied_A}},
                             "N exp(-A C) with A = 1; implied_A matches the count"));
  return out;
}

std::vector<BoundCheck> reciprocal_checks(const ZeroTable& table, double T) {
  const auto r = reciprocal_sum(table, T);
  return {
      verdict_check("6.4", T, r.bound_6_4, r.h_value, {{"R", double(r.r_value)}},
                    "H(T) >= T (log(T/2pi))^2 / (5 pi)^2"),
      verdict_check("6.5", T, r.bound_6_5, r.max_reciprocal, {},
                    "max 1/d_n >= (2/(25 pi)) log(T/2pi)"),
      verdict_check("6.6", T, r.min_gap, r.bound_6_6, {}, "min d_n <= 25 pi / (2 log(T/2pi))"),
  };
}

std::vector<BoundCheck> moment_shape_checks(const ZeroTable& table, double k, double T) {
  const auto seq = gaps(table, T);
  const long n = count_for(table, seq.size());
  const double s1 = power_sum(seq, 1.0);
  const double sk = power_sum(seq, k);
  const double lt = std::log(T);
  const double ratio = n > 0 ? sk * std::pow(lt, k) / n : 0.0;
  // Hoelder with the exact S_1: S_k (log T)^k / N >= (2pi (1 - eps_T))^k,
  // eps_T = 1 - S_1 log T / (2pi N).
  const double eps = n > 0 ? 1.0 - s1 * lt / (kTwoPi * n) : 0.0;
  const double shape = std::pow(kTwoPi * (1.0 - eps), k);
  const auto window = window_of(table, seq, k, T, 20);
  return {
      report_check("3.1", T, shape, ratio, {{"k", k}, {"eps_T", eps}},
                   "(2pi (1 - eps_T))^k against S_k (log T)^k / N"),
      report_check("1.2", T, window.first, window.second, {{"k", k}},
                   "empirical C1(k), C2(k) over 20 sub-heights in [T/10, T]"),
  };
}

}  // namespace zetagap::gaps
