#pragma once

#include <stdexcept>
#include <string>

namespace levels {

// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Codomain of the right factor does not match the domain of the left factor.
class CompositionError : public Error {
 public:
  using Error::Error;
};

// Morphisms from different shape categories were mixed.
class CategoryError : public Error {
 public:
  using Error::Error;
};

// A generator word is not dimension-consistent or has a malformed token.
class WordError : public Error {
 public:
  using Error::Error;
};

// A point passed to eval lies outside the domain object.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A cell above the truncation bound was requested.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// A configurable cell or sphere budget was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Random complex generation ran out of attempts.
class GenerationError : public Error {
 public:
  using Error::Error;
};

// A constructive filler produced something other than a filler. The filler
// constructions are theorems, so this firing always indicates a bug.
class AlgorithmViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace levels
