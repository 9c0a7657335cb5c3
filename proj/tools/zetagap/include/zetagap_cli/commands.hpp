#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zetagap/zero_table.hpp"
#include "zetagap_cli/report.hpp"
#include "zetagap_cli/run_config.hpp"

namespace zetagap::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitBoundFailure = 1,
  kExitCertificationFailure = 2,
  kExitIoOrConfig = 3,
};

/// Replaces the cache directory with $ZETAGAP_CACHE_DIR when it is set.
void apply_environment(RunConfig& config);

/// Certified zeros up to t_max, computed from height 10 to t_max + 10. The
/// result is cached under the cache directory keyed by (t_max, tol); a warm
/// cache is loaded without recomputing.
ZeroTable computed_table(const RunConfig& config, bool* from_cache = nullptr);

/// The table the analysis commands run on: the computed table for a computed
/// source, otherwise the imported one after Turing certification at t_max
/// and a sign-change check of every record.
ZeroTable obtain_table(const RunConfig& config);

/// 10 log-spaced heights in [100, t_max], ending exactly at t_max.
std::vector<double> bound_heights(double t_max);

BoundReportFile build_bound_report(const RunConfig& config, const ZeroTable& table);
std::vector<Sheet> build_stats(const RunConfig& config, const ZeroTable& table);

struct GueOutputs {
  std::string gaudin_csv;       // u,E,p,cdf grid
  std::vector<Sheet> sheets;    // moments, summary, and with a table: histogram, predictions
  BoundReportFile checks;       // report-only prediction comparisons
};

/// `table` may be null for the pure-GUE half.
GueOutputs build_gue(const RunConfig& config, const ZeroTable* table);

// Each command validates the config, writes its files into output_dir and
// returns an ExitCode. Errors are reported on `err`.
int cmd_compute(const RunConfig& config, std::ostream& err);
int cmd_stats(const RunConfig& config, std::ostream& err);
int cmd_bounds(const RunConfig& config, std::ostream& err);
int cmd_gue(const RunConfig& config, std::ostream& err);

/// compute, stats, bounds and gue on one table. A bound failure does not stop
/// the remaining steps; a certification or I/O error does.
int cmd_all(const RunConfig& config, std::ostream& err);

}  // namespace zetagap::cli
