#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leavitt {

/// Bad loop count or an edge index outside 1..loops.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A derivation whose generator values violate the defining relations, or a
/// file asking for something a derivation cannot be (e.g. D(v) != 0).
class InvalidDerivation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The randomized rewriting oracle ran past its step budget.
class TerminationDefect : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(message + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace leavitt
