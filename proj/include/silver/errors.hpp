#pragma once

#include <stdexcept>
#include <string>

namespace silver {

// Base of every error this library throws on bad input. Callers that want
// to distinguish recoverable data problems from programming errors catch
// this instead of std::exception.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text: wrong column count, unparsable number, bad JSON.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, size_t line = 0)
      : Error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
        line_(line) {}
  size_t line() const { return line_; }

private:
  size_t line_;
};

// Well-formed input that violates a contract: head index out of range,
// span out of bounds, S not a subset of P, missing annotation layer.
class ValidationError : public Error {
public:
  using Error::Error;
};

// Filesystem problems: unreadable input, failed write, failed rename.
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace silver
