#pragma once

#include <stdexcept>
#include <string>

namespace platcover {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual or JSON input (braid words, plat files, covering specs).
// CLI maps this to exit code 1.
class ParseError : public Error {
public:
  enum class Kind {
    NonIntegerToken,
    ZeroToken,
    IndexOutOfRange,
    BadStrandCount,
    BadFile,
  };

  ParseError(Kind kind, const std::string& msg) : Error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

// A documented precondition of an operation does not hold for the given
// input. CLI maps this to exit code 2.
class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// An internal cross-check failed. Indicates a bug in this library, never a
// user error. CLI maps this to exit code 3.
class InternalCheckError : public Error {
public:
  explicit InternalCheckError(const std::string& msg) : Error(msg) {}
};

}  // namespace platcover
