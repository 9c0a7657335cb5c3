#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace zetagap {

enum class ZeroSource { computed, imported };

std::string_view to_string(ZeroSource source);
ZeroSource zero_source_from_string(std::string_view text);

/// One ordinate of a nontrivial zero, stored as midpoint plus error radius.
struct ZeroRecord {
  long index = 0;  // 1-based position in the ordered list of all zeros
  double ordinate = 0.0;
  double err_radius = 0.0;
  ZeroSource source = ZeroSource::computed;
  // Z was seen to change sign across [ordinate - err_radius, ordinate + err_radius]
  bool sign_change_verified = false;

  double lo() const { return ordinate - err_radius; }
  double hi() const { return ordinate + err_radius; }

  friend bool operator==(const ZeroRecord&, const ZeroRecord&) = default;
};

/// Sorted list of zero ordinates with contiguous indices. Construction
/// rejects equal or overlapping ordinates (a double zero is never recorded
/// as two entries with the same midpoint).
class ZeroTable {
 public:
  ZeroTable() = default;
  explicit ZeroTable(std::vector<ZeroRecord> records, double t_cert = 0.0,
                     long count_formula_check = 0);

  std::span<const ZeroRecord> records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  const ZeroRecord& operator[](std::size_t i) const { return records_[i]; }
  const ZeroRecord& front() const { return records_.front(); }
  const ZeroRecord& back() const { return records_.back(); }

  /// Height up to which the list is known to be complete; 0 when uncertified.
  double t_cert() const { return t_cert_; }
  long count_formula_check() const { return count_formula_check_; }
  bool certified() const { return t_cert_ > 0.0 && count_formula_check_ == 0; }

  void set_certification(double t_cert, long discrepancy);

  /// Number of records with ordinate <= T.
  std::size_t count_at_most(double T) const;

  /// Copy of the ordinate midpoints.
  std::vector<double> ordinates() const;

  bool all_sign_change_verified() const;

  friend bool operator==(const ZeroTable&, const ZeroTable&) = default;

 private:
  std::vector<ZeroRecord> records_;
  double t_cert_ = 0.0;
  long count_formula_check_ = 0;
};

/// An interval on which Z changes sign.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  int sign_lo = 0;
  int sign_hi = 0;

  bool valid() const { return lo < hi && sign_lo * sign_hi == -1; }
  friend bool operator==(const Bracket&, const Bracket&) = default;
};

}  // namespace zetagap
