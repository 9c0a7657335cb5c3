#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "oracle_values.hpp"
#include "zetagap/errors.hpp"
#include "zetagap/gue.hpp"

namespace zetagap {
namespace {

const gue::GaudinTable& table() {
  static const gue::GaudinTable t = gue::build_gaudin_table();
  return t;
}

TEST(FredholmE, ExactAtZero) { EXPECT_EQ(gue::fredholm_E(0.0), 1.0); }

TEST(FredholmE, MatchesOracle) {
  EXPECT_NEAR(gue::fredholm_E(1.0), oracle::kE1, 1e-12);
  EXPECT_NEAR(gue::fredholm_E(2.0), oracle::kE2, 1e-13);
  EXPECT_NEAR(gue::fredholm_E(5.0) / oracle::kE5, 1.0, 1e-8);
}

TEST(FredholmE, OrderDoublingAgrees) {
  for (int i = 0; i <= 50; ++i) {
    const double s = 0.1 * i;
    EXPECT_NEAR(gue::fredholm_E(s, 40), gue::fredholm_E(s, 80), 1e-12) << s;
  }
  EXPECT_THROW(gue::fredholm_E(1.0, 5), PreconditionError);
}

TEST(FredholmE, SmallSExpansion) {
  // E(s) = 1 - s + pi^2 s^4 / 36 - pi^4 s^6 / 675 + O(s^8)
  const double pi2 = M_PI * M_PI;
  for (double s : {0.02, 0.05, 0.1}) {
    const double series = 1.0 - s + pi2 * std::pow(s, 4) / 36.0 - pi2 * pi2 * std::pow(s, 6) / 675.0;
    EXPECT_NEAR(gue::fredholm_E(s), series, 2e-12 + std::pow(s, 8)) << s;
  }
}

TEST(GaudinP, BasicShape) {
  EXPECT_EQ(gue::gaudin_p(0.0), 0.0);
  EXPECT_THROW(gue::gaudin_p(-0.1), PreconditionError);
  EXPECT_GT(gue::gaudin_p(1.0), gue::gaudin_p(2.0));
  EXPECT_GT(gue::gaudin_p(0.9), 0.9);
}

TEST(GaudinP, FiniteDifferenceMatchesSpectralRoute) {
  for (double u : {0.1, 0.5, 1.0, 1.7, 2.5, 3.5}) {
    EXPECT_NEAR(gue::gaudin_p(u), gue::gaudin_p_spectral(u), 1e-7) << u;
  }
}

TEST(FredholmEPrime, MatchesDifferenceQuotient) {
  for (double s : {0.3, 1.2, 2.8}) {
    const double h = 1e-5;
    const double fd = (gue::fredholm_E(s + h) - gue::fredholm_E(s - h)) / (2 * h);
    EXPECT_NEAR(gue::fredholm_E_prime(s), fd, 1e-8) << s;
  }
}

TEST(TailFit, GaussianDecay) {
  const auto tail = gue::fit_tail();
  EXPECT_GT(tail.b, 1.0);
  EXPECT_LT(tail.b, 1.3);
}

TEST(C1, NormalizationAndMean) {
  EXPECT_NEAR(gue::c1(0.0), 1.0, 1e-9);
  EXPECT_NEAR(gue::c1(1.0), 1.0, 1e-9);
}

TEST(C1, MatchesDoubledOrderOracle) {
  EXPECT_NEAR(gue::c1(2.0) / oracle::kC1_2, 1.0, 1e-9);
  EXPECT_NEAR(gue::c1(4.0) / oracle::kC1_4, 1.0, 1e-9);
}

TEST(C1, ErrorEstimateAndDomain) {
  const auto m = gue::c1_with_error(2.0);
  EXPECT_GT(m.err_estimate, 0.0);
  EXPECT_LT(m.err_estimate, 1e-8);
  EXPECT_GE(m.tail, 0.0);
  EXPECT_THROW(gue::c1(-1.0), PreconditionError);
}

TEST(GaudinTable, CdfIsADistribution) {
  const auto& t = table();
  EXPECT_EQ(t.cdf(0.0), 0.0);
  EXPECT_NEAR(t.cdf(5.0), 1.0, 1e-8);
  EXPECT_NEAR(t.cdf(50.0), 1.0, 1e-12);
  EXPECT_LT(t.tol, 1e-8);
  for (std::size_t i = 1; i < t.cdf_values.size(); ++i) {
    EXPECT_GE(t.cdf_values[i], t.cdf_values[i - 1]);
  }
  EXPECT_NEAR(t.cdf(1.0), 1.0 + gue::fredholm_E_prime(1.0), 1e-7);
}

TEST(GaudinTable, QuantileInvertsCdf) {
  const auto& t = table();
  for (double q : {0.01, 0.25, 0.5, 0.9, 0.999}) {
    EXPECT_NEAR(t.cdf(t.quantile(q)), q, 1e-6) << q;
  }
  EXPECT_NEAR(t.mass(0.0, 10.0), 1.0, 1e-8);
  EXPECT_NEAR(t.mass(0.5, 1.5), t.cdf(1.5) - t.cdf(0.5), 1e-12);
}

TEST(GaudinTable, CsvHasHeaderAndRows) {
  std::ostringstream out;
  gue::write_csv(table(), out);
  const auto text = out.str();
  EXPECT_EQ(text.rfind("u,E,p,cdf\n", 0), 0u);
  EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')),
            table().u_grid.size() + 1);
}

TEST(Histogram, Preconditions) {
  const auto draws = gue::sample_spacings(2000, 1, table());
  EXPECT_THROW(gue::compare_histogram(draws, 5, table()), PreconditionError);
  const std::vector<double> few(draws.begin(), draws.begin() + 999);
  EXPECT_THROW(gue::compare_histogram(few, 20, table()), TooFewSamples);
}

TEST(Histogram, SelfSampleFitsTheDensity) {
  const auto draws = gue::sample_spacings(10000, 7, table());
  const auto h = gue::compare_histogram(draws, 40, table());
  EXPECT_EQ(h.bins.size(), 40u);
  EXPECT_EQ(h.samples, 10000u);
  std::size_t total = 0;
  double mass = 0.0;
  for (const auto& b : h.bins) {
    total += b.observed;
    mass += b.predicted_mass;
  }
  EXPECT_EQ(total, 10000u);
  EXPECT_NEAR(mass, 1.0, 1e-9);
  EXPECT_LT(h.ks_distance, 0.02);
  // far below any plausible rejection level for ~40 degrees of freedom
  EXPECT_LT(h.chi_square, 100.0);
}

TEST(Histogram, ShiftedSampleIsFar) {
  auto draws = gue::sample_spacings(5000, 3, table());
  for (auto& d : draws) d *= 1.3;
  EXPECT_GT(gue::ks_distance(draws, table()), 0.1);
}

TEST(Sampling, DeterministicForASeed) {
  EXPECT_EQ(gue::sample_spacings(100, 42, table()), gue::sample_spacings(100, 42, table()));
  EXPECT_NE(gue::sample_spacings(100, 42, table()), gue::sample_spacings(100, 43, table()));
}

TEST(Prediction, BothFormsAndPreconditions) {
  const auto p = gue::predicted_moment(2.0, 1e4);
  EXPECT_NEAR(p.form_ratio, 1.0, 0.02);
  EXPECT_NEAR(p.c1_k, oracle::kC1_2, 1e-8);
  EXPECT_NEAR(p.max_gap_pred, 8.0 / std::sqrt(2.0 * std::log(1e4)), 1e-12);
  EXPECT_THROW(gue::predicted_moment(-0.5, 1e4), PreconditionError);
  EXPECT_THROW(gue::predicted_moment(2.0, 20.0), PreconditionError);
}

TEST(Prediction, CountAndProportion) {
  const std::vector<double> s{0.2, 0.8, 1.1, 1.9, 3.0};
  EXPECT_DOUBLE_EQ(gue::empirical_proportion(s, 0.5, 2.0), 0.6);
  const double T = 1e4;
  const double x = T / (2 * M_PI);
  EXPECT_NEAR(gue::predicted_count(table(), 0.0, 10.0, T), x * std::log(x), 1e-4 * x);
}

TEST(Series, SmallULimitIsPiSquaredOverThree) {
  const auto r = gue::series_report();
  EXPECT_NEAR(r.measured_limit, M_PI * M_PI / 3.0, 1e-4);
  EXPECT_GT(std::fabs(r.measured_limit - r.coefficient_pi_cubed), 5.0);
  EXPECT_DOUBLE_EQ(r.tail_pi_squared_over_8, M_PI * M_PI / 8.0);
}

TEST(Checks, AreReportOnly) {
  const auto p = gue::predicted_moment(2.0, 1e4, 10142.0);
  for (const auto& c : gue::moment_checks(p, 11766.5)) EXPECT_EQ(c.verdict, Verdict::report_only);
  const auto g = gue::max_gap_checks(2.59, 1e4);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].bound_id, "2.7");
  EXPECT_EQ(g[1].bound_id, "2.8");
}

}  // namespace
}  // namespace zetagap
