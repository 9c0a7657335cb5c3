#include "zetagap_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "zetagap/counting.hpp"
#include "zetagap/errors.hpp"
#include "zetagap/gap_stats.hpp"
#include "zetagap/gue.hpp"
#include "zetagap/parallel.hpp"
#include "zetagap/zero_finder.hpp"
#include "zetagap/zero_store.hpp"

namespace zetagap::cli {
namespace {

namespace fs = std::filesystem;

constexpr double kScanStart = 10.0;
constexpr double kScanOverhang = 10.0;
constexpr std::size_t kMinHistogramSamples = 1000;

fs::path output_path(const RunConfig& config, const std::string& name) {
  return fs::path(config.output_dir) / name;
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  std::error_code ec;
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create '" + path.parent_path().string() + "': " + ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  body(out);
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

std::string extension(const RunConfig& config) {
  return config.format == OutputFormat::json ? ".json" : ".csv";
}

void write_report(const RunConfig& config, const std::string& stem, const BoundReportFile& report) {
  write_file(output_path(config, stem + extension(config)), [&](std::ostream& out) {
    if (config.format == OutputFormat::json) {
      write_json(report, out);
    } else {
      write_csv(report, out);
    }
  });
}

// JSON puts every sheet in one file; CSV writes one file per sheet.
void write_sheets(const RunConfig& config, const std::string& stem, const ReportHeader& header,
                  const std::vector<Sheet>& sheets) {
  if (config.format == OutputFormat::json) {
    write_file(output_path(config, stem + ".json"),
               [&](std::ostream& out) { write_json(header, sheets, out); });
    return;
  }
  for (const auto& sheet : sheets) {
    write_file(output_path(config, stem + "_" + sheet.name + ".csv"),
               [&](std::ostream& out) { write_csv(header, sheet, out); });
  }
}

ReportHeader header_for(const RunConfig& config, double t_cert) {
  ReportHeader h;
  h.config_hash = config_hash(config);
  h.t_cert = t_cert;
  return h;
}

void configure_runtime(const RunConfig& config) {
  validate(config);
  set_worker_count(config.workers);
}

std::string g17(double x) { return format_number(x); }

fs::path computed_cache_path(const RunConfig& config) {
  const auto key = store::cache_key("computed;t_max=" + g17(config.t_max) + ";tol=" + g17(config.tol));
  return fs::path(config.store.cache_dir) / ("zeros-" + key.substr(0, 16) + ".csv");
}

// Runs body and maps library errors onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const CertificationFailed& e) {
    err << "zetagap: certification failed in [" << g17(e.window_lo()) << ", "
        << g17(e.window_hi()) << "]: located " << e.located() << ", expected "
        << e.expected() << ": " << e.what() << '\n';
    return kExitCertificationFailure;
  } catch (const UncertifiedRange& e) {
    err << "zetagap: " << e.what() << '\n';
    return kExitCertificationFailure;
  } catch (const PrecisionUnreachable& e) {
    err << "zetagap: " << e.what() << '\n';
    return kExitCertificationFailure;
  } catch (const ConvergenceFailure& e) {
    err << "zetagap: " << e.what() << '\n';
    return kExitCertificationFailure;
  } catch (const ParseError& e) {
    err << "zetagap: line " << e.line() << ": " << e.what() << '\n';
    return kExitIoOrConfig;
  } catch (const Error& e) {
    err << "zetagap: " << e.what() << '\n';
    return kExitIoOrConfig;
  } catch (const std::exception& e) {
    err << "zetagap: " << e.what() << '\n';
    return kExitIoOrConfig;
  }
}

store::TableFormat sniff_format(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::string first;
  std::getline(in, first);
  return first.rfind("# zetagap zero table", 0) == 0 ? store::TableFormat::internal_csv
                                                     : store::TableFormat::plain_ordinates;
}

void append(std::vector<BoundCheck>& to, std::vector<BoundCheck> from) {
  to.insert(to.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

}  // namespace

void apply_environment(RunConfig& config) {
  if (const char* dir = std::getenv("ZETAGAP_CACHE_DIR"); dir != nullptr && *dir != '\0') {
    config.store.cache_dir = dir;
  }
}

ZeroTable computed_table(const RunConfig& config, bool* from_cache) {
  const auto cached = computed_cache_path(config);
  if (fs::exists(cached)) {
    std::ifstream in(cached);
    auto table = store::parse_internal_csv(in);
    if (table.certified() && table.t_cert() >= config.t_max) {
      if (from_cache) *from_cache = true;
      return table;
    }
  }
  if (from_cache) *from_cache = false;
  zeros::ComputeOptions options;
  options.tolerance = config.tol;
  auto table = zeros::compute_zeros(kScanStart, config.t_max + kScanOverhang, 1, options);
  zeros::turing_certify(table, config.t_max);

  const fs::path partial = cached.string() + ".part";
  store::export_table(table, partial.string());
  std::error_code ec;
  fs::rename(partial, cached, ec);
  if (ec) throw IoError("cannot move cache file into place: " + ec.message());
  return table;
}

ZeroTable obtain_table(const RunConfig& config) {
  if (config.source.kind == store::SourceKind::computed) return computed_table(config);

  std::string path = config.source.location;
  if (config.source.kind == store::SourceKind::remote_url) {
    path = store::fetch_remote(config.source.location, config.store.cache_dir);
  }
  store::TableSource local{store::SourceKind::local_file, path, sniff_format(path)};
  auto table = store::import_zeros(local, config.store);
  zeros::turing_certify(table, config.t_max);
  zeros::verify_sign_changes(table);
  return table;
}

std::vector<double> bound_heights(double t_max) {
  constexpr int kCount = 10;
  const double lo = std::log(100.0);
  const double hi = std::log(t_max);
  std::vector<double> out;
  for (int i = 0; i < kCount; ++i) {
    double T = std::min(std::exp(lo + (hi - lo) * i / (kCount - 1)), t_max);
    if (i == 0) T = 100.0;
    if (i == kCount - 1) T = t_max;
    if (out.empty() || T > out.back()) out.push_back(T);
  }
  return out;
}

BoundReportFile build_bound_report(const RunConfig& config, const ZeroTable& table) {
  BoundReportFile report;
  report.header = header_for(config, table.t_cert());
  auto& entries = report.entries;

  const long located = static_cast<long>(table.count_at_most(config.t_max));
  entries.push_back(verdict_check("turing", config.t_max,
                                  std::fabs(static_cast<double>(table.count_formula_check())),
                                  0.0, {{"N", static_cast<double>(located)}},
                                  "located count minus the counting formula at t_max"));

  gaps::LargeGapOptions large;
  large.c1_2 = gue::c1(2.0, 1e-9, config.quad_order);
  large.c1_4 = gue::c1(4.0, 1e-9, config.quad_order);

  for (double T : bound_heights(config.t_max)) {
    append(entries, counting::check_S_bounds(T, config.assume_rh));
    if (!config.assume_rh) {
      entries.push_back(report_check("2.2", T, std::nan(""), 0.25, {},
                                     "conditional-skipped: assume_rh is false; "
                                     "|S(T)| log log T / log T against 1/4 + o(1)"));
    }
    append(entries, gaps::telescoping_checks(table, T));
    append(entries, gaps::second_moment_checks(table, T, config.assume_rh));
    for (double C : config.c_list) {
      append(entries, gaps::large_gap_checks(table, C, T, config.assume_rh, large));
    }
    append(entries, gaps::reciprocal_checks(table, T));
    auto ext = gaps::extremes(table, T);
    append(entries, std::move(ext.checks));
    append(entries, gue::max_gap_checks(ext.max_gap, T));
    for (double k : config.k_list) {
      if (k >= 1.0) append(entries, gaps::moment_shape_checks(table, k, T));
    }
  }
  return report;
}

std::vector<Sheet> build_stats(const RunConfig& config, const ZeroTable& table) {
  const double T = config.t_max;
  Sheet moments{"moments",
                {"k", "T", "s_k", "n_count", "normalized_ratio", "gue_prediction", "window_min",
                 "window_max"},
                {}};
  gaps::MomentOptions mopts;
  mopts.quad_order = config.quad_order;
  for (double k : config.k_list) {
    const auto m = gaps::moment_sum(table, k, T, mopts);
    moments.rows.push_back({m.k, m.T, m.s_k, m.n_count, m.normalized_ratio,
                            m.gue_prediction ? Cell(*m.gue_prediction) : Cell(),
                            m.fujii_window.first, m.fujii_window.second});
  }

  const auto r = gaps::reciprocal_sum(table, T);
  Sheet reciprocal{"reciprocal",
                   {"T", "h_value", "r_value", "bound_6_4", "max_reciprocal", "bound_6_5",
                    "min_gap", "bound_6_6"},
                   {{r.T, r.h_value, r.r_value, r.bound_6_4, r.max_reciprocal, r.bound_6_5,
                     r.min_gap, r.bound_6_6}}};

  const auto e = gaps::extremes(table, T);
  Sheet extremes{"extremes",
                 {"T", "mu_emp", "mu_index", "lambda_emp", "lambda_index", "max_gap",
                  "max_gap_index", "min_gap", "min_gap_index"},
                 {{e.T, e.mu_emp, e.mu_index, e.lambda_emp, e.lambda_index, e.max_gap,
                   e.max_gap_index, e.min_gap, e.min_gap_index}}};
  return {moments, reciprocal, extremes};
}

GueOutputs build_gue(const RunConfig& config, const ZeroTable* table) {
  GueOutputs out;
  const auto gaudin = gue::build_gaudin_table(gue::kUMax, 0.02, config.quad_order);
  {
    std::ostringstream csv;
    gue::write_csv(gaudin, csv);
    out.gaudin_csv = csv.str();
  }

  Sheet moments{"moments", {"k", "c1", "err_estimate", "tail"}, {}};
  for (double k : config.k_list) {
    if (!(k > -1.0)) continue;
    const auto c = gue::c1_with_error(k, 1e-9, config.quad_order);
    moments.rows.push_back({k, c.value, c.err_estimate, c.tail});
  }

  const auto series = gue::series_report(config.quad_order);
  Sheet summary{"summary", {"key", "value"}, {}};
  auto put = [&summary](std::string key, Cell value) {
    summary.rows.push_back({std::move(key), std::move(value)});
  };
  put("table_tol", gaudin.tol);
  put("table_step", gaudin.step);
  put("tail_a", gaudin.tail.a);
  put("tail_b", gaudin.tail.b);
  put("tail_pi_squared_over_8", series.tail_pi_squared_over_8);
  put("series_ratio_0.02", series.ratio_002);
  put("series_ratio_0.04", series.ratio_004);
  put("series_ratio_0.08", series.ratio_008);
  put("series_limit", series.measured_limit);
  put("series_pi_cubed_over_3", series.coefficient_pi_cubed);
  put("series_pi_squared_over_3", series.coefficient_pi_squared);

  out.checks.header = header_for(config, table ? table->t_cert() : 0.0);
  if (table != nullptr) {
    const double T = config.t_max;
    const auto seq = gaps::gaps(*table, T);
    put("samples", static_cast<long>(seq.size()));
    Sheet histogram{"histogram", {"lo", "hi", "observed", "frequency", "predicted_mass"}, {}};
    if (seq.size() >= kMinHistogramSamples) {
      const auto hist = gue::compare_histogram(seq.normalized, config.bins, gaudin);
      put("chi_square", hist.chi_square);
      put("degrees_of_freedom", static_cast<long>(hist.degrees_of_freedom));
      put("ks_distance", hist.ks_distance);
      for (const auto& b : hist.bins) {
        histogram.rows.push_back(
            {b.lo, b.hi, static_cast<long>(b.observed), b.frequency, b.predicted_mass});
      }
    } else {
      put("histogram", std::string("skipped: fewer than 1000 spacings below t_max"));
    }

    Sheet predictions{"predictions",
                      {"k", "T", "c1_k", "predicted_S_k", "predicted_S_k_n", "n_used",
                       "form_ratio", "measured_S_k"},
                      {}};
    const double n = static_cast<double>(seq.size());
    for (double k : config.k_list) {
      if (!(k >= 0.0)) continue;
      const auto p = gue::predicted_moment(k, T, n, config.quad_order);
      const double measured = k == 0.0 ? n : gaps::power_sum(seq, k);
      predictions.rows.push_back({k, T, p.c1_k, p.predicted_S_k, p.predicted_S_k_n, p.n_used,
                                  p.form_ratio, measured});
      append(out.checks.entries, gue::moment_checks(p, measured));
    }
    double max_gap = 0.0;
    for (double d : seq.gaps) max_gap = std::max(max_gap, d);
    append(out.checks.entries, gue::max_gap_checks(max_gap, T));

    out.sheets = {moments, summary, histogram, predictions};
  } else {
    out.sheets = {moments, summary};
  }
  return out;
}

namespace {

int write_stats(const RunConfig& config, const ZeroTable& table) {
  write_sheets(config, "stats", header_for(config, table.t_cert()), build_stats(config, table));
  return kExitOk;
}

int write_bounds(const RunConfig& config, const ZeroTable& table, std::ostream& err) {
  const auto report = build_bound_report(config, table);
  write_report(config, "bounds", report);
  if (!report.any_failed()) return kExitOk;
  for (const auto& c : report.entries) {
    if (c.verdict == Verdict::fails) {
      err << "zetagap: bound " << c.bound_id << " fails at T = " << g17(c.T) << ": "
          << g17(c.lhs) << " > " << g17(c.rhs) << '\n';
    }
  }
  return kExitBoundFailure;
}

int write_gue(const RunConfig& config, const ZeroTable* table) {
  const auto out = build_gue(config, table);
  write_file(output_path(config, "gaudin.csv"), [&](std::ostream& o) { o << out.gaudin_csv; });
  write_sheets(config, "gue", out.checks.header, out.sheets);
  if (table != nullptr) write_report(config, "gue_checks", out.checks);
  return kExitOk;
}

}  // namespace

int cmd_compute(const RunConfig& config, std::ostream& err) {
  return guarded(err, [&] {
    configure_runtime(config);
    const auto table = computed_table(config);
    store::export_table(table, output_path(config, "zeros.csv").string());
    return static_cast<int>(kExitOk);
  });
}

int cmd_stats(const RunConfig& config, std::ostream& err) {
  return guarded(err, [&] {
    configure_runtime(config);
    return write_stats(config, obtain_table(config));
  });
}

int cmd_bounds(const RunConfig& config, std::ostream& err) {
  return guarded(err, [&] {
    configure_runtime(config);
    return write_bounds(config, obtain_table(config), err);
  });
}

int cmd_gue(const RunConfig& config, std::ostream& err) {
  return guarded(err, [&] {
    configure_runtime(config);
    if (!config.gue_compare) return write_gue(config, nullptr);
    const auto table = obtain_table(config);
    return write_gue(config, &table);
  });
}

int cmd_all(const RunConfig& config, std::ostream& err) {
  return guarded(err, [&] {
    configure_runtime(config);
    const auto table = obtain_table(config);
    if (config.source.kind == store::SourceKind::computed) {
      store::export_table(table, output_path(config, "zeros.csv").string());
    }
    write_stats(config, table);
    const int bounds = write_bounds(config, table, err);
    write_gue(config, config.gue_compare ? &table : nullptr);
    return bounds;
  });
}

}  // namespace zetagap::cli
