#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psiprime {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (non-prime modulus, non-coprime orders, mismatched partition sizes).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A documented size cap was exceeded.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// An internal identity failed, e.g. a closed form left a division remainder.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `position` is the 0-based offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at column " + std::to_string(position + 1) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace psiprime
