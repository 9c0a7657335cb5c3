#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "zetagap/bound_check.hpp"

namespace zetagap::cli {

inline constexpr const char* kToolVersion = "0.3.0";

struct ReportHeader {
  std::string tool_version = kToolVersion;
  std::string config_hash;
  double t_cert = 0.0;
};

struct BoundReportFile {
  ReportHeader header;
  std::vector<BoundCheck> entries;

  bool any_failed() const { return zetagap::any_failed(entries); }
};

// CSV: three '#' header lines, then
//   bound_id,T,lhs,rhs,verdict,margin,params,note
// with params as key=value pairs joined by ';'. JSON: an object with the
// header fields and "entries", a flat list of checks. Non-finite numbers are
// written as nan/inf in CSV and null in JSON.
void write_csv(const BoundReportFile& report, std::ostream& out);
void write_json(const BoundReportFile& report, std::ostream& out);

/// A rectangular table of named columns for the stats and GUE outputs.
/// std::monostate marks a missing value.
using Cell = std::variant<std::monostate, double, long, std::string>;

struct Sheet {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

void write_csv(const ReportHeader& header, const Sheet& sheet, std::ostream& out);

/// One JSON object: header fields plus one array of row objects per sheet.
void write_json(const ReportHeader& header, const std::vector<Sheet>& sheets, std::ostream& out);

/// %.17g, with nan, inf and -inf spelled out.
std::string format_number(double x);

}  // namespace zetagap::cli
