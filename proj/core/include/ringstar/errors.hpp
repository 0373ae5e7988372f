#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringstar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ring-spec or element text. `position()` is a byte offset into the input.
class SpecError : public Error {
 public:
  SpecError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured size guard (carrier, ideal enumeration, matrix scan) was exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition (improper ideal, non-semi-unit, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two computations that must agree did not, or a guaranteed construction failed.
/// Always indicates a bug in the library or in the ring construction.
class DefectError : public Error {
 public:
  using Error::Error;
};

}  // namespace ringstar
