#pragma once

#include <stdexcept>
#include <string>

namespace fano95 {

/// Base class for every domain failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No unit of (Z/r)^x brings the weights to the form {1, a, r-a}.
class NonTerminal : public Error {
 public:
  using Error::Error;
};

/// A coordinate vertex lies on the general member but no monomial x_i^k x_j
/// of the right degree exists.
class NotQuasismooth : public Error {
 public:
  using Error::Error;
};

/// Two witness monomials at a coordinate vertex give different local types.
class AmbiguousType : public Error {
 public:
  using Error::Error;
};

/// The edge between two coordinate vertices is contained in the hypersurface.
class EdgeInX : public Error {
 public:
  using Error::Error;
};

/// Divisor classes and tower context disagree in length.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace fano95
