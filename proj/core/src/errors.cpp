#include "zetagap/errors.hpp"

namespace zetagap {

CertificationFailed::CertificationFailed(const std::string& what,
                                         double window_lo, double window_hi,
                                         long located, long expected)
    : Error(what),
      window_lo_(window_lo),
      window_hi_(window_hi),
      located_(located),
      expected_(expected) {}

ParseError::ParseError(const std::string& what, std::size_t line)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

}  // namespace zetagap
