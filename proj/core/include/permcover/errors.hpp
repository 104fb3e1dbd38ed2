#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permcover {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of incompatible length.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The operation is not supported for the given input kind.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Malformed permutation text. `position()` is the byte offset of the fault.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace permcover
