#pragma once

#include <stdexcept>
#include <string>

namespace copos {

/// Raised when an input exceeds a configured size cap. Callers are expected to
/// report the refusal instead of falling back to a truncated computation.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph or program text. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace copos
