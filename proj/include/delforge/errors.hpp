#pragma once

#include <stdexcept>
#include <string>

namespace delforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit (vector length, matrix size, lattice dimension).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input that cannot be parsed (rational strings, JSON files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (indefinite form, odd n, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The vertex set does not determine a unique circumsphere.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Lattice enumeration visited more nodes than the configured cap.
class EnumerationLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace delforge
