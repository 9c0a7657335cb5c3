#include "zetagap_cli/run_config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "zetagap/errors.hpp"

namespace zetagap::cli {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& text, std::size_t line) {
  double v = 0.0;
  const auto t = trim(text);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    throw ParseError("not a number: '" + t + "'", line);
  }
  return v;
}

long to_long(const std::string& text, std::size_t line) {
  long v = 0;
  const auto t = trim(text);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    throw ParseError("not an integer: '" + t + "'", line);
  }
  return v;
}

bool to_bool(const std::string& text, std::size_t line) {
  const auto t = trim(text);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw ParseError("not a boolean: '" + t + "'", line);
}

std::vector<double> to_list(const std::string& text, std::size_t line) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(item, line));
  return out;
}

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string_view to_string(OutputFormat format) {
  return format == OutputFormat::json ? "json" : "csv";
}

void validate(const RunConfig& config) {
  if (!(config.t_max >= 100.0) || !std::isfinite(config.t_max)) {
    throw PreconditionError("t_max must be finite and at least 100");
  }
  if (!(config.tol >= 1e-12 && config.tol <= 1e-6)) {
    throw PreconditionError("tol must lie in [1e-12, 1e-6]");
  }
  for (double c : config.c_list) {
    if (!(c > 0.0) || !std::isfinite(c)) throw PreconditionError("every C must be positive");
  }
  for (double k : config.k_list) {
    if (!std::isfinite(k)) throw PreconditionError("every k must be finite");
  }
  if (config.quad_order < 10) throw PreconditionError("quad_order must be at least 10");
  if (config.bins < 20) throw PreconditionError("bins must be at least 20");
  if (config.source.kind != store::SourceKind::computed && config.source.location.empty()) {
    throw PreconditionError("source has no path or URL");
  }
}

store::TableSource source_from_argument(const std::string& text) {
  store::TableSource s;
  s.location = text;
  s.kind = text.find("://") != std::string::npos ? store::SourceKind::remote_url
                                                 : store::SourceKind::local_file;
  return s;
}

void apply_config_file(RunConfig& config, std::istream& in) {
  std::map<std::string, std::string> store_keys;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const auto line = trim(raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", line_no);
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "t_max") {
      config.t_max = to_double(value, line_no);
    } else if (key == "tol") {
      config.tol = to_double(value, line_no);
    } else if (key == "k") {
      config.k_list = to_list(value, line_no);
    } else if (key == "C") {
      config.c_list = to_list(value, line_no);
    } else if (key == "assume_rh") {
      config.assume_rh = to_bool(value, line_no);
    } else if (key == "source") {
      config.source = source_from_argument(value);
    } else if (key == "out") {
      config.output_dir = value;
    } else if (key == "format") {
      if (value == "csv") {
        config.format = OutputFormat::csv;
      } else if (value == "json") {
        config.format = OutputFormat::json;
      } else {
        throw ParseError("format must be csv or json", line_no);
      }
    } else if (key == "quad_order") {
      config.quad_order = static_cast<int>(to_long(value, line_no));
    } else if (key == "bins") {
      config.bins = static_cast<int>(to_long(value, line_no));
    } else if (key == "workers") {
      config.workers = static_cast<unsigned>(to_long(value, line_no));
    } else if (key == "gue_compare") {
      config.gue_compare = to_bool(value, line_no);
    } else if (key.rfind("zeros.", 0) == 0) {
      store_keys[key] = value;
    } else {
      throw ParseError("unknown key '" + key + "'", line_no);
    }
  }
  if (!store_keys.empty()) {
    const auto parsed = store::store_config_from(store_keys);
    if (store_keys.count("zeros.source.url")) config.store.url = parsed.url;
    if (store_keys.count("zeros.cache_dir")) config.store.cache_dir = parsed.cache_dir;
    if (store_keys.count("zeros.index_offset")) config.store.index_offset = parsed.index_offset;
  }
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  apply_config_file(config, in);
}

std::string canonical_form(const RunConfig& config) {
  std::ostringstream out;
  out << "t_max=" << g17(config.t_max) << '\n';
  out << "tol=" << g17(config.tol) << '\n';
  out << "k=";
  for (std::size_t i = 0; i < config.k_list.size(); ++i) {
    out << (i ? "," : "") << g17(config.k_list[i]);
  }
  out << "\nC=";
  for (std::size_t i = 0; i < config.c_list.size(); ++i) {
    out << (i ? "," : "") << g17(config.c_list[i]);
  }
  out << "\nassume_rh=" << (config.assume_rh ? "true" : "false") << '\n';
  out << "source=" << store::to_string(config.source.kind) << ':' << config.source.location << '\n';
  out << "source_url=" << config.store.url << '\n';
  out << "index_offset=" << config.store.index_offset << '\n';
  out << "quad_order=" << config.quad_order << '\n';
  out << "bins=" << config.bins << '\n';
  out << "gue_compare=" << (config.gue_compare ? "true" : "false") << '\n';
  out << "format=" << to_string(config.format) << '\n';
  return out.str();
}

std::string config_hash(const RunConfig& config) {
  return store::cache_key(canonical_form(config));
}

}  // namespace zetagap::cli
