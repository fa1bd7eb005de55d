#pragma once

#include <stdexcept>
#include <string>

namespace liecurv {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands differ in side length or scalar field.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An entry is NaN or infinite where a finite matrix is required.
class NonFiniteEntry : public Error {
 public:
  using Error::Error;
};

/// An intermediate or final result left the representable range.
class Overflow : public Error {
 public:
  using Error::Error;
};

/// An input that must lie in p or in k has components in both.
class NotPureType : public Error {
 public:
  using Error::Error;
};

/// The two spanning vectors of a section are (numerically) dependent.
class DegenerateSection : public Error {
 public:
  using Error::Error;
};

class NotCommuting : public Error {
 public:
  using Error::Error;
};

class UnknownGroup : public Error {
 public:
  using Error::Error;
};

/// A tangent vector does not belong to the subgroup's Lie algebra.
class TangentNotInAlgebra : public Error {
 public:
  using Error::Error;
};

class IncompleteBasis : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (matrix JSON, structure or group selectors).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace liecurv
