#pragma once

#include <stdexcept>
#include <string>

namespace pomega {

/// Syntax error with source position (1-based line/column).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, int line, int col)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ")"),
        line_(line), col_(col) {}

  int line() const { return line_; }
  int column() const { return col_; }

private:
  int line_;
  int col_;
};

/// Raised when a construction exceeds the configured state or time budget.
/// Never stands in for a truth verdict.
class ResourceLimit : public std::runtime_error {
public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pomega
