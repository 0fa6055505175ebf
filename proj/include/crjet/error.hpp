#pragma once

#include <stdexcept>
#include <string>

namespace crjet {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched shapes: non-square determinant, field/model size mismatch, ...
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Division by zero and other undefined arithmetic.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// A model failed one of the nondegeneracy checks.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A Levi-Tanaka bracket table violates one of its defining invariants.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

/// An element was not homogeneous of the requested degree.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// Prolongation degrees requested out of order.
class SequencingError : public Error {
 public:
  using Error::Error;
};

/// The prolongation did not reach a zero degree before the cap.
class NonterminationError : public Error {
 public:
  using Error::Error;
};

/// Catalog family parameter out of range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Input that is well formed but not acceptable (e.g. non-holomorphic field).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed text or JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant (Jacobi, closure, nondegeneracy). Always a bug or
/// corrupted input, never a recoverable condition.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace crjet
