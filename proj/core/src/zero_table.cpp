#include "zetagap/zero_table.hpp"

#include <algorithm>
#include <string>

#include "zetagap/errors.hpp"

namespace zetagap {

std::string_view to_string(ZeroSource source) {
  switch (source) {
    case ZeroSource::computed:
      return "computed";
    case ZeroSource::imported:
      return "imported";
  }
  return "computed";
}

ZeroSource zero_source_from_string(std::string_view text) {
  if (text == "computed") return ZeroSource::computed;
  if (text == "imported") return ZeroSource::imported;
  throw Error("unknown zero source '" + std::string(text) + "'");
}

ZeroTable::ZeroTable(std::vector<ZeroRecord> records, double t_cert,
                     long count_formula_check)
    : records_(std::move(records)),
      t_cert_(t_cert),
      count_formula_check_(count_formula_check) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& r = records_[i];
    if (!(r.ordinate > 0.0) || !(r.err_radius >= 0.0)) {
      throw PreconditionError("zero record " + std::to_string(r.index) +
                              " has a non-positive ordinate or negative radius");
    }
    if (i == 0) continue;
    const auto& prev = records_[i - 1];
    if (r.index != prev.index + 1) {
      throw PreconditionError("zero indices are not contiguous at index " +
                              std::to_string(r.index));
    }
    if (!(r.ordinate > prev.ordinate) || !(r.lo() > prev.hi())) {
      throw PreconditionError("zero records " + std::to_string(prev.index) + " and " +
                              std::to_string(r.index) +
                              " are not strictly separated");
    }
  }
}

void ZeroTable::set_certification(double t_cert, long discrepancy) {
  t_cert_ = t_cert;
  count_formula_check_ = discrepancy;
}

std::size_t ZeroTable::count_at_most(double T) const {
  const auto it = std::upper_bound(
      records_.begin(), records_.end(), T,
      [](double value, const ZeroRecord& r) { return value < r.ordinate; });
  return static_cast<std::size_t>(it - records_.begin());
}

std::vector<double> ZeroTable::ordinates() const {
  std::vector<double> out;
  out.reserve(records_.size());
  for (const auto& r : records_) out.push_back(r.ordinate);
  return out;
}

bool ZeroTable::all_sign_change_verified() const {
  return std::all_of(records_.begin(), records_.end(),
                     [](const ZeroRecord& r) { return r.sign_change_verified; });
}

}  // namespace zetagap
