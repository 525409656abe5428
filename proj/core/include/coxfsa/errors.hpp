#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coxfsa {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed group-definition text or word input. `line()` is 1-based, 0 when
// the error is not tied to a line.
class ParseError : public Error {
 public:
  enum class Kind {
    kSyntax,
    kAsymmetric,
    kBadEntry,
    kDuplicateGenerator,
    kUnknownGenerator,
  };

  ParseError(Kind kind, std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        kind_(kind),
        line_(line) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

// Scalars (or elements) from different fields (systems) were combined.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// A configured cap (ball size, oracle word length, state count, ...) was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Something that the theory guarantees did not happen. Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace coxfsa
