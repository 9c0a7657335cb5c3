#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zetagap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The requested accuracy cannot be certified by any available method.
class PrecisionUnreachable : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

/// Raised by s_of_T when argument tracking cannot resolve the phase.
class StepCollapse : public Error {
 public:
  using Error::Error;
};

/// The zero list does not account for every zero below some height.
class CertificationFailed : public Error {
 public:
  CertificationFailed(const std::string& what, double window_lo,
                      double window_hi, long located, long expected);

  double window_lo() const noexcept { return window_lo_; }
  double window_hi() const noexcept { return window_hi_; }
  long located() const noexcept { return located_; }
  long expected() const noexcept { return expected_; }

 private:
  double window_lo_;
  double window_hi_;
  long located_;
  long expected_;
};

/// Bad input text: carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class MonotonicityError : public ParseError {
 public:
  using ParseError::ParseError;
};

class EmptyTableError : public Error {
 public:
  using Error::Error;
};

class UncertifiedRange : public Error {
 public:
  using Error::Error;
};

class TailFitError : public Error {
 public:
  using Error::Error;
};

class TooFewSamples : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace zetagap
