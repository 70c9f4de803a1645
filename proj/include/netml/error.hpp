#pragma once

#include <stdexcept>
#include <string>

namespace netml {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix shapes do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Polynomials from different variable contexts were mixed, or a variable
/// name is unknown.
class ContextError : public Error {
 public:
  using Error::Error;
};

/// Leading term of the zero polynomial was requested.
class UndefinedLeadingTermError : public Error {
 public:
  using Error::Error;
};

/// A congruence transform was given a singular matrix.
class InvalidTransformError : public Error {
 public:
  using Error::Error;
};

/// Type-A parameters violate 0 != c != -9 g^2, or an unknown type name.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// The operation needs a net containing an invertible matrix.
class RegularityError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the input ideal (e.g. homogeneity) does not hold.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A sampled data matrix produced a positive-dimensional critical locus.
class NonGenericSampleError : public Error {
 public:
  using Error::Error;
};

/// Resampling could not produce a stable generic count.
class GenericityError : public Error {
 public:
  using Error::Error;
};

}  // namespace netml
