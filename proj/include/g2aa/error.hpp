#ifndef G2AA_ERROR_HPP
#define G2AA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace g2aa {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on spaces of different dimension or have the wrong shape.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input text or JSON could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the mathematical content failed (non-nilpotent matrix,
/// zero covector, degree-0 interior product, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A metric that must be nondegenerate is not.
class DegenerateMetricError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The three-form is not a G2- or G2*-structure.
class NotG2Error : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace g2aa

#endif  // G2AA_ERROR_HPP
