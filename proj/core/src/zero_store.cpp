#include "zetagap/zero_store.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <chrono>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>
#include <vector>

#include <httplib.h>

#include "zetagap/errors.hpp"

namespace zetagap::store {
namespace {

namespace fs = std::filesystem;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view text, double& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

bool parse_long(std::string_view text, long& out) {
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

int fraction_digits(std::string_view token) {
  const auto dot = token.find('.');
  if (dot == std::string_view::npos) return 0;
  int d = 0;
  for (std::size_t i = dot + 1; i < token.size() && token[i] >= '0' && token[i] <= '9'; ++i) ++d;
  return d;
}

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

ZeroTable build_table(std::vector<ZeroRecord> records, double t_cert, long check,
                      std::size_t first_line) {
  try {
    return ZeroTable(std::move(records), t_cert, check);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), first_line);
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "': " + std::strerror(errno));
  return in;
}

}  // namespace

std::string_view to_string(SourceKind kind) {
  switch (kind) {
    case SourceKind::local_file:
      return "local_file";
    case SourceKind::remote_url:
      return "remote_url";
    case SourceKind::computed:
      return "computed";
  }
  return "computed";
}

std::string_view to_string(TableFormat format) {
  return format == TableFormat::internal_csv ? "internal_csv" : "plain_ordinates";
}

StoreConfig store_config_from(const std::map<std::string, std::string>& values) {
  StoreConfig config;
  if (auto it = values.find("zeros.source.url"); it != values.end()) config.url = it->second;
  if (auto it = values.find("zeros.cache_dir"); it != values.end()) config.cache_dir = it->second;
  if (auto it = values.find("zeros.index_offset"); it != values.end()) {
    if (!parse_long(trim(it->second), config.index_offset) || config.index_offset < 0) {
      throw ParseError("zeros.index_offset must be a non-negative integer", 0);
    }
  }
  return config;
}

ZeroTable parse_plain_ordinates(std::istream& in, long index_offset) {
  std::vector<ZeroRecord> records;
  std::string line;
  std::size_t line_no = 0;
  double previous = 0.0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto token = trim(line);
    if (token.empty() || token.front() == '#') continue;
    double value = 0.0;
    if (!parse_double(token, value) || !std::isfinite(value)) {
      throw ParseError("not a decimal ordinate: '" + std::string(token) + "'", line_no);
    }
    if (!(value > 0.0)) throw ParseError("ordinate must be positive", line_no);
    if (!records.empty() && !(value > previous)) {
      throw MonotonicityError("ordinates are not strictly ascending", line_no);
    }
    ZeroRecord r;
    r.index = index_offset + static_cast<long>(records.size()) + 1;
    r.ordinate = value;
    r.err_radius = std::pow(10.0, -(fraction_digits(token) - 1));
    r.source = ZeroSource::imported;
    r.sign_change_verified = false;
    records.push_back(r);
    previous = value;
  }
  if (in.bad()) throw IoError("read error");
  if (records.empty()) throw EmptyTableError("the zero table has no ordinates");
  return build_table(std::move(records), 0.0, 0, 1);
}

ZeroTable parse_internal_csv(std::istream& in) {
  std::vector<ZeroRecord> records;
  double t_cert = 0.0;
  long check = 0;
  bool header_seen = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      const auto body = trim(text.substr(1));
      const auto colon = body.find(':');
      if (colon == std::string_view::npos) continue;
      const auto key = trim(body.substr(0, colon));
      const auto value = trim(body.substr(colon + 1));
      if (key == "t_cert" && !parse_double(value, t_cert)) {
        throw ParseError("bad t_cert", line_no);
      }
      if (key == "count_formula_check" && !parse_long(value, check)) {
        throw ParseError("bad count_formula_check", line_no);
      }
      continue;
    }
    if (!header_seen) {
      if (text != "index,ordinate,err_radius,source,sign_change_verified") {
        throw ParseError("unexpected column header", line_no);
      }
      header_seen = true;
      continue;
    }
    const auto fields = split_commas(text);
    if (fields.size() != 5) throw ParseError("expected 5 columns", line_no);
    ZeroRecord r;
    if (!parse_long(fields[0], r.index)) throw ParseError("bad index", line_no);
    if (!parse_double(fields[1], r.ordinate)) throw ParseError("bad ordinate", line_no);
    if (!parse_double(fields[2], r.err_radius)) throw ParseError("bad err_radius", line_no);
    try {
      r.source = zero_source_from_string(fields[3]);
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
    if (fields[4] != "0" && fields[4] != "1") throw ParseError("bad verified flag", line_no);
    r.sign_change_verified = fields[4] == "1";
    if (!records.empty() && !(r.ordinate > records.back().ordinate)) {
      throw MonotonicityError("ordinates are not strictly ascending", line_no);
    }
    records.push_back(r);
  }
  if (in.bad()) throw IoError("read error");
  if (records.empty()) throw EmptyTableError("the zero table has no records");
  return build_table(std::move(records), t_cert, check, 1);
}

ZeroTable import_zeros(const TableSource& source, const StoreConfig& config) {
  std::string path;
  switch (source.kind) {
    case SourceKind::computed:
      throw PreconditionError("a computed table cannot be imported");
    case SourceKind::local_file:
      path = source.location;
      break;
    case SourceKind::remote_url:
      path = fetch_remote(source.location.empty() ? config.url : source.location,
                          config.cache_dir);
      break;
  }
  if (path.empty()) throw PreconditionError("table source has no location");
  auto in = open_input(path);
  if (source.format == TableFormat::internal_csv) return parse_internal_csv(in);
  return parse_plain_ordinates(in, config.index_offset);
}

void write_internal_csv(const ZeroTable& table, std::ostream& out) {
  out << "# zetagap zero table\n";
  out << "# certified: " << (table.certified() ? "true" : "false") << '\n';
  out << "# t_cert: " << format_g17(table.t_cert()) << '\n';
  out << "# count_formula_check: " << table.count_formula_check() << '\n';
  out << "index,ordinate,err_radius,source,sign_change_verified\n";
  for (const auto& r : table.records()) {
    out << r.index << ',' << format_g17(r.ordinate) << ',' << format_g17(r.err_radius) << ','
        << to_string(r.source) << ',' << (r.sign_change_verified ? 1 : 0) << '\n';
  }
}

void export_table(const ZeroTable& table, const std::string& path) {
  const fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
    if (ec) throw IoError("cannot create '" + target.parent_path().string() + "': " + ec.message());
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing: " + std::strerror(errno));
  write_internal_csv(table, out);
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::string cache_key(std::string_view url) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(url.data(), url.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xf]);
  }
  return hex;
}

std::string fetch_remote(const std::string& url, const std::string& cache_dir) {
  if (url.empty()) throw PreconditionError("no URL configured for the zero table");
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw IoError("malformed URL '" + url + "'");
  const auto path_start = url.find('/', scheme_end + 3);
  const std::string origin = url.substr(0, path_start);
  const std::string target = path_start == std::string::npos ? "/" : url.substr(path_start);

  const fs::path cached = fs::path(cache_dir) / (cache_key(url) + ".txt");
  if (fs::exists(cached)) return cached.string();

  httplib::Client client(origin);
  client.set_follow_location(true);
  client.set_connection_timeout(10);
  client.set_read_timeout(120);

  std::string failure = "no response";
  for (int attempt = 0; attempt < 3; ++attempt) {
    if (attempt > 0) std::this_thread::sleep_for(std::chrono::milliseconds(250 << attempt));
    auto res = client.Get(target);
    if (!res) {
      failure = httplib::to_string(res.error());
      continue;
    }
    if (res->status != 200) {
      failure = "HTTP status " + std::to_string(res->status);
      continue;
    }
    std::error_code ec;
    fs::create_directories(cache_dir, ec);
    if (ec) throw IoError("cannot create cache directory '" + cache_dir + "': " + ec.message());
    const fs::path partial = cached.string() + ".part";
    {
      std::ofstream out(partial, std::ios::binary | std::ios::trunc);
      out << res->body;
      if (!out) throw IoError("cannot write cache file '" + partial.string() + "'");
    }
    fs::rename(partial, cached, ec);
    if (ec) throw IoError("cannot move cache file into place: " + ec.message());
    return cached.string();
  }
  throw IoError("fetching '" + url + "' failed after 3 attempts: " + failure);
}

}  // namespace zetagap::store
