#pragma once

#include <stdexcept>
#include <string>

namespace dkg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument lies on (or within 1e-12 of) a pole of the gamma function.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// E^2 coincides with m^2, so the scale factor vanishes.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Grid too small, non-uniform, or of the wrong kind for an operator.
class GridError : public Error {
 public:
  using Error::Error;
};

class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// Only the even-parity sector is implemented.
class UnsupportedParity : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (alpha literal, complex literal, lists).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dkg
