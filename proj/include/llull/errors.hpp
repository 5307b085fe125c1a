#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace llull {

/// Inputs that do not fit together, e.g. a valuation over another universe.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap or guard was exceeded. The engine refuses rather
/// than approximating.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ballot or matrix input. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Signals a broken engine invariant (e.g. a cyclic accepted preference
/// relation under the transitivity doctrine).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace llull
