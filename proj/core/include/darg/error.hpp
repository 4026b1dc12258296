#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace darg {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Malformed formula or knowledge-base text. Carries the 1-based position
/// of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, SourcePos pos, std::string file = {});

  SourcePos pos() const { return pos_; }
  const std::string& file() const { return file_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  SourcePos pos_;
  std::string file_;
};

/// A template could not be instantiated (no constants, or a variable left
/// where only ground text is allowed).
class GroundingError : public Error {
 public:
  using Error::Error;
};

/// A configured bound (atom count, subset enumeration, node count) was
/// exceeded. Never converted into a "false" verdict.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Valuation does not cover an atom of the evaluated formula.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Request is well-formed text but not applicable (wrong logic, unknown
/// command, bad flag value).
class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace darg
