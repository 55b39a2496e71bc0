#pragma once

#include <stdexcept>
#include <string>

namespace cox {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed system description text. `line` is 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

// A precondition on arguments was violated (bad index, T == U, n < 1, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured work bound was hit before the computation finished. This is
// never a silent truncation: partial results are discarded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// The requested quantity is undefined for this input (e.g. CAT(0)-dimension
// bounds of a finite group).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace cox
