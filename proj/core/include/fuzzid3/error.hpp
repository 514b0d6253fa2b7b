#pragma once

#include <stdexcept>
#include <string>

namespace fuzzid3 {

// Base class for every error raised by the library. Callers that only want
// to report and exit can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or unreadable input data. `line()` is 1-based, 0 when the error
// is not tied to a particular line.
class DataError : public Error {
 public:
  DataError(const std::string& message, std::size_t line = 0)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A precondition of an operation was violated by the caller.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzzid3
