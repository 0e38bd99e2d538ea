#pragma once

#include <stdexcept>
#include <string>

namespace gonlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list or divisor text. line() is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Raised when a search exceeds its configured Budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace gonlab
