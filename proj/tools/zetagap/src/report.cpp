#include "zetagap_cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace zetagap::cli {
namespace {

using ojson = nlohmann::ordered_json;

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

ojson json_number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

std::string params_text(const std::map<std::string, double>& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ';';
    out += key + '=' + format_number(value);
  }
  return out;
}

void write_header_lines(const ReportHeader& header, std::ostream& out) {
  out << "# zetagap " << header.tool_version << '\n';
  out << "# config_hash: " << header.config_hash << '\n';
  out << "# t_cert: " << format_number(header.t_cert) << '\n';
}

ojson header_json(const ReportHeader& header) {
  ojson j;
  j["tool"] = "zetagap";
  j["version"] = header.tool_version;
  j["config_hash"] = header.config_hash;
  j["t_cert"] = json_number(header.t_cert);
  return j;
}

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double x) const { return format_number(x); }
    std::string operator()(long x) const { return std::to_string(x); }
    std::string operator()(const std::string& s) const { return csv_field(s); }
  };
  return std::visit(Visitor{}, cell);
}

ojson cell_json(const Cell& cell) {
  struct Visitor {
    ojson operator()(std::monostate) const { return nullptr; }
    ojson operator()(double x) const { return json_number(x); }
    ojson operator()(long x) const { return x; }
    ojson operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(const BoundReportFile& report, std::ostream& out) {
  write_header_lines(report.header, out);
  out << "bound_id,T,lhs,rhs,verdict,margin,params,note\n";
  for (const auto& c : report.entries) {
    out << csv_field(c.bound_id) << ',' << format_number(c.T) << ',' << format_number(c.lhs) << ','
        << format_number(c.rhs) << ',' << to_string(c.verdict) << ',' << format_number(c.margin)
        << ',' << csv_field(params_text(c.params)) << ',' << csv_field(c.note) << '\n';
  }
}

void write_json(const BoundReportFile& report, std::ostream& out) {
  ojson j = header_json(report.header);
  ojson entries = ojson::array();
  for (const auto& c : report.entries) {
    ojson e;
    e["bound_id"] = c.bound_id;
    e["T"] = json_number(c.T);
    ojson params = ojson::object();
    for (const auto& [key, value] : c.params) params[key] = json_number(value);
    e["params"] = std::move(params);
    e["lhs"] = json_number(c.lhs);
    e["rhs"] = json_number(c.rhs);
    e["verdict"] = std::string(to_string(c.verdict));
    e["margin"] = json_number(c.margin);
    e["note"] = c.note;
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  out << j.dump(2) << '\n';
}

void write_csv(const ReportHeader& header, const Sheet& sheet, std::ostream& out) {
  write_header_lines(header, out);
  for (std::size_t i = 0; i < sheet.columns.size(); ++i) {
    out << (i ? "," : "") << csv_field(sheet.columns[i]);
  }
  out << '\n';
  for (const auto& row : sheet.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

void write_json(const ReportHeader& header, const std::vector<Sheet>& sheets, std::ostream& out) {
  ojson j = header_json(header);
  for (const auto& sheet : sheets) {
    ojson rows = ojson::array();
    for (const auto& row : sheet.rows) {
      ojson obj;
      for (std::size_t i = 0; i < row.size() && i < sheet.columns.size(); ++i) {
        obj[sheet.columns[i]] = cell_json(row[i]);
      }
      rows.push_back(std::move(obj));
    }
    j[sheet.name] = std::move(rows);
  }
  out << j.dump(2) << '\n';
}

}  // namespace zetagap::cli
