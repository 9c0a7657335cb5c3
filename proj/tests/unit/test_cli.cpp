#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "zetagap/errors.hpp"
#include "zetagap/zero_store.hpp"
#include "zetagap_cli/commands.hpp"

namespace zetagap {
namespace {

using testing::TempDir;
namespace fs = std::filesystem;

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

cli::RunConfig small_config(const TempDir& dir, double t_max = 1000.0) {
  cli::RunConfig c;
  c.t_max = t_max;
  c.output_dir = dir.str("out");
  c.store.cache_dir = dir.str("cache");
  return c;
}

TEST(RunConfig, Validation) {
  cli::RunConfig c;
  EXPECT_NO_THROW(cli::validate(c));
  c.t_max = 50.0;
  EXPECT_THROW(cli::validate(c), PreconditionError);
  c = {};
  c.tol = 1e-5;
  EXPECT_THROW(cli::validate(c), PreconditionError);
  c = {};
  c.c_list = {1.0, -2.0};
  EXPECT_THROW(cli::validate(c), PreconditionError);
  c = {};
  c.bins = 5;
  EXPECT_THROW(cli::validate(c), PreconditionError);
}

TEST(RunConfig, ConfigFile) {
  cli::RunConfig c;
  std::istringstream in(
      "# run settings\n"
      "t_max = 2500\n"
      "tol = 1e-10\n"
      "k = 1, 2, 3\n"
      "C = 0.5\n"
      "assume_rh = true\n"
      "format = json\n"
      "zeros.cache_dir = /tmp/zc\n"
      "zeros.index_offset = 3\n");
  cli::apply_config_file(c, in);
  EXPECT_EQ(c.t_max, 2500.0);
  EXPECT_EQ(c.tol, 1e-10);
  EXPECT_EQ(c.k_list, (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(c.c_list, (std::vector<double>{0.5}));
  EXPECT_TRUE(c.assume_rh);
  EXPECT_EQ(c.format, cli::OutputFormat::json);
  EXPECT_EQ(c.store.cache_dir, "/tmp/zc");
  EXPECT_EQ(c.store.index_offset, 3);

  std::istringstream unknown("speed = fast\n");
  EXPECT_THROW(cli::apply_config_file(c, unknown), ParseError);
  std::istringstream malformed("t_max 100\n");
  EXPECT_THROW(cli::apply_config_file(c, malformed), ParseError);
}

TEST(RunConfig, SourceArgument) {
  EXPECT_EQ(cli::source_from_argument("zeros.txt").kind, store::SourceKind::local_file);
  EXPECT_EQ(cli::source_from_argument("https://h/z").kind, store::SourceKind::remote_url);
}

TEST(RunConfig, HashCoversResultsOnly) {
  cli::RunConfig a;
  cli::RunConfig b;
  b.output_dir = "elsewhere";
  b.workers = 3;
  b.store.cache_dir = "/tmp/other";
  EXPECT_EQ(cli::config_hash(a), cli::config_hash(b));
  b.t_max = 2000.0;
  EXPECT_NE(cli::config_hash(a), cli::config_hash(b));
  EXPECT_EQ(cli::config_hash(a).size(), 64u);
}

TEST(Report, CsvQuotingAndNonFinite) {
  cli::BoundReportFile r;
  r.header.config_hash = "abc";
  r.header.t_cert = 100.0;
  r.entries.push_back(report_check("2.2", 100.0, std::nan(""), 0.25, {{"S", 0.5}}, "a, b"));
  std::ostringstream csv;
  cli::write_csv(r, csv);
  EXPECT_NE(csv.str().find("2.2,100,nan,0.25,report_only,nan,S=0.5,\"a, b\"\n"),
            std::string::npos);
  std::ostringstream json;
  cli::write_json(r, json);
  EXPECT_NE(json.str().find("\"lhs\": null"), std::string::npos);
  EXPECT_NE(json.str().find("\"config_hash\": \"abc\""), std::string::npos);
}

TEST(BoundHeights, TenLogSpaced) {
  const auto h = cli::bound_heights(1e4);
  ASSERT_EQ(h.size(), 10u);
  EXPECT_EQ(h.front(), 100.0);
  EXPECT_EQ(h.back(), 1e4);
  for (std::size_t i = 1; i < h.size(); ++i) {
    EXPECT_NEAR(h[i] / h[i - 1], std::pow(100.0, 1.0 / 9.0), 1e-9);
  }
  EXPECT_EQ(cli::bound_heights(100.0).size(), 1u);
}

TEST(Compute, PersistsCertifiedTableAndReusesCache) {
  TempDir dir("compute");
  auto c = small_config(dir, 100.0);
  std::ostringstream err;
  ASSERT_EQ(cli::cmd_compute(c, err), cli::kExitOk) << err.str();
  const auto first = slurp(fs::path(c.output_dir) / "zeros.csv");
  const auto table = store::import_zeros(
      {store::SourceKind::local_file, c.output_dir + "/zeros.csv", store::TableFormat::internal_csv});
  EXPECT_EQ(table.count_at_most(100.0), 29u);
  EXPECT_TRUE(table.certified());

  bool from_cache = false;
  cli::computed_table(c, &from_cache);
  EXPECT_TRUE(from_cache);
  ASSERT_EQ(cli::cmd_compute(c, err), cli::kExitOk);
  EXPECT_EQ(slurp(fs::path(c.output_dir) / "zeros.csv"), first);
}

TEST(Bounds, DefaultsHoldAndConditionalsAreSkipped) {
  TempDir dir("bounds");
  auto c = small_config(dir);
  std::ostringstream err;
  ASSERT_EQ(cli::cmd_bounds(c, err), cli::kExitOk) << err.str();
  const auto text = slurp(fs::path(c.output_dir) / "bounds.csv");
  EXPECT_EQ(text.find(",fails,"), std::string::npos);
  std::istringstream lines(text);
  std::string line;
  int skipped_48 = 0;
  int skipped_22 = 0;
  while (std::getline(lines, line)) {
    const bool skipped = line.find("conditional-skipped") != std::string::npos;
    if (line.rfind("4.8,", 0) == 0) skipped_48 += skipped;
    if (line.rfind("2.2,", 0) == 0) skipped_22 += skipped;
  }
  EXPECT_EQ(skipped_48, 10);
  EXPECT_EQ(skipped_22, 10);
}

TEST(Bounds, DeletedZeroGivesNonZeroExit) {
  TempDir dir("fault");
  auto c = small_config(dir);
  const auto& t = testing::table_1000();
  {
    std::ofstream out(dir.str("faulty.txt"));
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == 300) continue;
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.9f\n", t[i].ordinate);
      out << buf;
    }
  }
  c.source = cli::source_from_argument(dir.str("faulty.txt"));
  std::ostringstream err;
  EXPECT_EQ(cli::cmd_bounds(c, err), cli::kExitCertificationFailure);
  EXPECT_NE(err.str().find("certification failed"), std::string::npos);
}

TEST(Bounds, ImportedTableIsRecertified) {
  TempDir dir("import");
  auto c = small_config(dir);
  const auto& t = testing::table_1000();
  {
    std::ofstream out(dir.str("zeros.txt"));
    for (const auto& r : t.records()) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.9f\n", r.ordinate);
      out << buf;
    }
  }
  c.source = cli::source_from_argument(dir.str("zeros.txt"));
  c.format = cli::OutputFormat::json;
  std::ostringstream err;
  EXPECT_EQ(cli::cmd_bounds(c, err), cli::kExitOk) << err.str();
  EXPECT_TRUE(fs::exists(fs::path(c.output_dir) / "bounds.json"));
}

TEST(Gue, PureRunAndBinsContract) {
  TempDir dir("gue");
  auto c = small_config(dir);
  c.gue_compare = false;
  c.k_list = {0.0, 1.0};
  std::ostringstream err;
  ASSERT_EQ(cli::cmd_gue(c, err), cli::kExitOk) << err.str();
  const auto moments = slurp(fs::path(c.output_dir) / "gue_moments.csv");
  EXPECT_NE(moments.find("\n0,1.0000000000"), std::string::npos);
  EXPECT_NE(moments.find("\n1,1.0000000000"), std::string::npos);
  EXPECT_TRUE(fs::exists(fs::path(c.output_dir) / "gaudin.csv"));

  c.bins = 5;
  EXPECT_EQ(cli::cmd_gue(c, err), cli::kExitIoOrConfig);
}

TEST(Stats, MomentRowsPerK) {
  TempDir dir("stats");
  auto c = small_config(dir);
  c.k_list = {0.0, 1.0, -1.0};
  const auto table = cli::obtain_table(c);
  const auto sheets = cli::build_stats(c, table);
  ASSERT_EQ(sheets.size(), 3u);
  ASSERT_EQ(sheets[0].rows.size(), 3u);
  EXPECT_EQ(std::get<double>(sheets[0].rows[0][2]), 649.0);
  std::ostringstream err;
  EXPECT_EQ(cli::cmd_stats(c, err), cli::kExitOk);
  EXPECT_TRUE(fs::exists(fs::path(c.output_dir) / "stats_moments.csv"));
}

TEST(Errors, MissingSourceIsIoError) {
  TempDir dir("missing");
  auto c = small_config(dir);
  c.source = cli::source_from_argument(dir.str("nope.txt"));
  std::ostringstream err;
  EXPECT_EQ(cli::cmd_stats(c, err), cli::kExitIoOrConfig);
}

}  // namespace
}  // namespace zetagap
