#include "zetagap/bound_check.hpp"

#include <algorithm>
#include <cmath>

namespace zetagap {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::report_only:
      return "report_only";
  }
  return "report_only";
}

BoundCheck verdict_check(std::string bound_id, double T, double lhs, double rhs,
                         std::map<std::string, double> params, std::string note) {
  BoundCheck c;
  c.bound_id = std::move(bound_id);
  c.T = T;
  c.params = std::move(params);
  c.lhs = lhs;
  c.rhs = rhs;
  c.margin = rhs - lhs;
  // NaN on either side is a failure, never a pass.
  c.verdict = (lhs <= rhs) ? Verdict::holds : Verdict::fails;
  c.note = std::move(note);
  return c;
}

BoundCheck report_check(std::string bound_id, double T, double lhs, double rhs,
                        std::map<std::string, double> params, std::string note) {
  BoundCheck c = verdict_check(std::move(bound_id), T, lhs, rhs, std::move(params),
                               std::move(note));
  c.verdict = Verdict::report_only;
  return c;
}

bool any_failed(const std::vector<BoundCheck>& checks) {
  return std::any_of(checks.begin(), checks.end(),
                     [](const BoundCheck& c) { return c.verdict == Verdict::fails; });
}

}  // namespace zetagap
