#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zetagap/errors.hpp"
#include "zetagap_cli/commands.hpp"

namespace cli = zetagap::cli;

int main(int argc, char** argv) {
  CLI::App app{"Zeros of the zeta function, their gaps, and GUE comparisons"};
  app.set_version_flag("--version", std::string("zetagap ") + cli::kToolVersion);

  std::string command;
  std::string config_path;
  double t_max = 0.0;
  double tol = 0.0;
  std::vector<double> k_list;
  std::vector<double> c_list;
  bool assume_rh = false;
  std::string source;
  std::string out_dir;
  std::string format;
  int quad_order = 0;
  int bins = 0;
  unsigned workers = 0;
  bool no_compare = false;

  app.add_option("command", command, "compute | stats | bounds | gue | all")
      ->required()
      ->check(CLI::IsMember({"compute", "stats", "bounds", "gue", "all"}));
  app.add_option("--config", config_path, "key = value config file; flags override it");
  auto* o_tmax = app.add_option("--tmax", t_max, "height to compute and certify up to (>= 100)");
  auto* o_tol = app.add_option("--tol", tol, "ordinate tolerance in [1e-12, 1e-6]");
  auto* o_k = app.add_option("--k", k_list, "moment exponent; repeatable")->take_all();
  auto* o_c = app.add_option("--C", c_list, "large-gap constant; repeatable")->take_all();
  auto* o_rh = app.add_flag("--assume-rh", assume_rh, "evaluate bounds conditional on RH");
  auto* o_source = app.add_option("--source", source, "zero table path or URL");
  auto* o_out = app.add_option("--out", out_dir, "output directory");
  auto* o_format = app.add_option("--format", format, "csv or json")
                       ->check(CLI::IsMember({"csv", "json"}));
  auto* o_quad = app.add_option("--quad-order", quad_order, "Gauss-Legendre order for the GUE kernel");
  auto* o_bins = app.add_option("--bins", bins, "histogram bins (>= 20)");
  auto* o_workers = app.add_option("--workers", workers, "worker threads; 0 uses every core");
  app.add_flag("--no-compare", no_compare, "gue: skip the comparison with a zero table");

  CLI11_PARSE(app, argc, argv);

  cli::RunConfig config;
  try {
    if (!config_path.empty()) cli::apply_config_file(config, config_path);
  } catch (const zetagap::ParseError& e) {
    std::cerr << "zetagap: " << config_path << ": line " << e.line() << ": " << e.what() << '\n';
    return cli::kExitIoOrConfig;
  } catch (const zetagap::Error& e) {
    std::cerr << "zetagap: " << e.what() << '\n';
    return cli::kExitIoOrConfig;
  }
  if (o_tmax->count()) config.t_max = t_max;
  if (o_tol->count()) config.tol = tol;
  if (o_k->count()) config.k_list = k_list;
  if (o_c->count()) config.c_list = c_list;
  if (o_rh->count()) config.assume_rh = assume_rh;
  if (o_source->count()) config.source = cli::source_from_argument(source);
  if (config.source.kind == zetagap::store::SourceKind::computed && !config.store.url.empty()) {
    config.source = cli::source_from_argument(config.store.url);
  }
  if (o_out->count()) config.output_dir = out_dir;
  if (o_format->count()) {
    config.format = format == "json" ? cli::OutputFormat::json : cli::OutputFormat::csv;
  }
  if (o_quad->count()) config.quad_order = quad_order;
  if (o_bins->count()) config.bins = bins;
  if (o_workers->count()) config.workers = workers;
  if (no_compare) config.gue_compare = false;
  cli::apply_environment(config);

  if (command == "compute") return cli::cmd_compute(config, std::cerr);
  if (command == "stats") return cli::cmd_stats(config, std::cerr);
  if (command == "bounds") return cli::cmd_bounds(config, std::cerr);
  if (command == "gue") return cli::cmd_gue(config, std::cerr);
  return cli::cmd_all(config, std::cerr);
}
