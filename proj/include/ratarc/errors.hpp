#pragma once

#include <stdexcept>
#include <string>

namespace ratarc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an arc or function.
struct DomainError : Error {
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
  using Error::Error;
};

/// Contour quadrature could not certify a zero count.
struct ContourError : Error {
  using Error::Error;
};

/// Malformed configuration or CLI input.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace ratarc
