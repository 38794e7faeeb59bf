#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hdisc {

/// Argument outside the open unit disc (or outside [0, 1] for radii).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Non-finite numbers, malformed grids, bad counts.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed function document. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hdisc
