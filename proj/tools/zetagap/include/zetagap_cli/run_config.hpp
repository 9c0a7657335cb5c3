#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "zetagap/zero_store.hpp"

namespace zetagap::cli {

enum class OutputFormat { csv, json };

struct RunConfig {
  double t_max = 10000.0;
  double tol = 1e-9;
  std::vector<double> k_list{-1.0, 0.0, 1.0, 2.0, 4.0};
  std::vector<double> c_list{1.0, 3.141592653589793, 6.283185307179586, 12.566370614359172};
  bool assume_rh = false;
  store::TableSource source;  // kind == computed means "compute, using the cache"
  std::string output_dir = "zetagap-out";
  OutputFormat format = OutputFormat::csv;
  int quad_order = 40;
  int bins = 50;
  bool gue_compare = true;  // false runs the pure-GUE half of `gue` only
  unsigned workers = 0;     // 0 picks the hardware concurrency
  store::StoreConfig store;
};

/// Throws PreconditionError naming the first violated field.
void validate(const RunConfig& config);

/// Reads `key = value` lines; '#' starts a comment. Keys: t_max, tol, k, C
/// (comma-separated lists), assume_rh, source, out, format, quad_order,
/// bins, workers, gue_compare and the zeros.* store keys. Unknown keys raise
/// ParseError.
void apply_config_file(RunConfig& config, std::istream& in);
void apply_config_file(RunConfig& config, const std::string& path);

/// Interprets a --source argument: anything with "://" is a URL.
store::TableSource source_from_argument(const std::string& text);

/// The result-affecting fields in a fixed textual form. Output paths, cache
/// location and worker count are left out, since they do not change results.
std::string canonical_form(const RunConfig& config);

/// Hex SHA-256 of canonical_form.
std::string config_hash(const RunConfig& config);

std::string_view to_string(OutputFormat format);

}  // namespace zetagap::cli
