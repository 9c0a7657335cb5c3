#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "zetagap/zero_finder.hpp"
#include "zetagap/zero_table.hpp"

namespace zetagap::testing {

/// Zeros in [10, 1010], certified at 1000. Computed once per process.
inline const ZeroTable& table_1000() {
  static const ZeroTable table = [] {
    auto t = zeros::compute_zeros(10.0, 1010.0);
    zeros::turing_certify(t, 1000.0);
    return t;
  }();
  return table;
}

/// Table with the given ordinates, indices from 1, every record verified.
inline ZeroTable synthetic_table(const std::vector<double>& ordinates, double t_cert) {
  std::vector<ZeroRecord> records;
  for (std::size_t i = 0; i < ordinates.size(); ++i) {
    ZeroRecord r;
    r.index = static_cast<long>(i) + 1;
    r.ordinate = ordinates[i];
    r.err_radius = 1e-12;
    r.sign_change_verified = true;
    records.push_back(r);
  }
  return ZeroTable(std::move(records), t_cert, 0);
}

/// Ascending ordinates starting near `start` with gaps drawn from
/// [min_gap, max_gap].
inline std::vector<double> random_ordinates(std::mt19937_64& rng, std::size_t n, double start,
                                            double min_gap, double max_gap) {
  std::uniform_real_distribution<double> gap(min_gap, max_gap);
  std::vector<double> out;
  double t = start;
  for (std::size_t i = 0; i < n; ++i) {
    t += gap(rng);
    out.push_back(t);
  }
  return out;
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("zetagap-" + tag + "-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string str(const std::string& child = {}) const {
    return child.empty() ? path_.string() : (path_ / child).string();
  }

 private:
  std::filesystem::path path_;
};

}  // namespace zetagap::testing
