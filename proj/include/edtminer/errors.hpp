#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edtminer {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input (XML, CSV, list literal, JSON artifact). Carries a
/// location when the underlying reader can provide one.
struct ParseError : Error {
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
      : Error(format(message, line, column)), line(line), column(column) {}

  std::size_t line;
  std::size_t column;

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    return message + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
  }
};

/// Invalid configuration or usage: bad flag values, missing files,
/// out-of-range parameters. Maps to exit code 2 in the CLI.
struct ConfigError : Error {
  using Error::Error;
};

/// Domain-level failure during mining or evaluation: degenerate labels,
/// schema mismatches, class mismatches. Maps to exit code 1 in the CLI.
struct DomainError : Error {
  using Error::Error;
};

}  // namespace edtminer
