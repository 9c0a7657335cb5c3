#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace zetagap {

enum class Verdict { holds, fails, report_only };

std::string_view to_string(Verdict verdict);

/// One inequality instantiated at a height T. For verdict-bearing checks the
/// verdict is `holds` exactly when lhs <= rhs. Asymptotic statements whose
/// o(1) or implied constants are unknown carry `report_only`.
struct BoundCheck {
  std::string bound_id;  // equation tag, e.g. "2.3" or "6.4"
  double T = 0.0;
  std::map<std::string, double> params;
  double lhs = 0.0;
  double rhs = 0.0;
  Verdict verdict = Verdict::report_only;
  double margin = 0.0;  // rhs - lhs
  std::string note;
};

BoundCheck verdict_check(std::string bound_id, double T, double lhs, double rhs,
                         std::map<std::string, double> params = {}, std::string note = {});

BoundCheck report_check(std::string bound_id, double T, double lhs, double rhs,
                        std::map<std::string, double> params = {}, std::string note = {});

bool any_failed(const std::vector<BoundCheck>& checks);

}  // namespace zetagap
