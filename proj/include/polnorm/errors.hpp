#pragma once

#include <stdexcept>
#include <string>

namespace polnorm {

// Base class for all library errors. Subclasses map onto the CLI exit codes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (bad JSON, bad number syntax). Carries a byte offset
// into the input when one is known; npos otherwise.
class ParseError : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit ParseError(const std::string& msg, std::size_t position = npos)
      : Error(position == npos ? msg : msg + " (at byte " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Structurally valid input that violates the schema: unknown attribute,
// operator not legal for the attribute kind, null action, and so on.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// An event value's variant differs from the condition value's variant.
class TypeMismatchError : public Error {
 public:
  using Error::Error;
};

// Input uses a feature outside the supported subset (set operators,
// class membership, duties, ...). The message names the offending term.
class UnsupportedFeatureError : public Error {
 public:
  using Error::Error;
};

// Policy comparison in strict mode rejects policies with obligations.
class ObligationsUnsupportedError : public UnsupportedFeatureError {
 public:
  using UnsupportedFeatureError::UnsupportedFeatureError;
};

// Brute-force enumeration would exceed the configured event cap.
class DomainTooLargeError : public Error {
 public:
  using Error::Error;
};

// An operation precondition was violated (e.g. splitting a non-simplified rule).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// A library invariant failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace polnorm
