#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "zetagap/zero_table.hpp"

namespace zetagap::store {

enum class SourceKind { local_file, remote_url, computed };
enum class TableFormat { plain_ordinates, internal_csv };

std::string_view to_string(SourceKind kind);
std::string_view to_string(TableFormat format);

struct TableSource {
  SourceKind kind = SourceKind::computed;
  std::string location;  // path or URL; unused for computed tables
  TableFormat format = TableFormat::plain_ordinates;
};

/// Settings read from the zeros.* configuration keys.
struct StoreConfig {
  std::string url;                          // zeros.source.url
  std::string cache_dir = ".zetagap-cache";  // zeros.cache_dir
  long index_offset = 0;                    // zeros.index_offset: index of the first row minus 1
};

/// Picks the zeros.* keys out of a flat key/value map. Unknown keys are
/// ignored; malformed numbers raise ParseError with line 0.
StoreConfig store_config_from(const std::map<std::string, std::string>& values);

/// Reads a table. For plain_ordinates each record gets source = imported,
/// err_radius = 10^-(d-1) with d the digits after the decimal point, and
/// sign_change_verified = false. Remote URLs go through the cache.
///
/// Throws IoError, ParseError (with line number), MonotonicityError, or
/// EmptyTableError. Throws PreconditionError for a computed source.
ZeroTable import_zeros(const TableSource& source, const StoreConfig& config = {});

ZeroTable parse_plain_ordinates(std::istream& in, long index_offset = 0);
ZeroTable parse_internal_csv(std::istream& in);

/// Writes the internal_csv format. Ordinates and radii are printed with 17
/// significant digits, so import_zeros reproduces the table exactly.
void export_table(const ZeroTable& table, const std::string& path);
void write_internal_csv(const ZeroTable& table, std::ostream& out);

/// Hex SHA-256 of the URL; the cache file is <cache_dir>/<key>.txt.
std::string cache_key(std::string_view url);

/// Path of the cached copy of url, downloading it on a cache miss. The GET
/// is tried up to 3 times with doubling backoff.
std::string fetch_remote(const std::string& url, const std::string& cache_dir);

}  // namespace zetagap::store
