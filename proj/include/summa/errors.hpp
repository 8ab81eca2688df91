#pragma once

#include <stdexcept>
#include <string>

namespace summa {

enum class ErrorKind { Parse, Schema, Precondition };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Malformed input text (not valid JSON, bad rational literal, ...).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

// Well-formed JSON that does not match the expected schema.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& what) : Error(ErrorKind::Schema, what) {}
};

// An operation was handed an input that violates its precondition.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

// Sum of the order-1 coefficients of a zeta-expansion is not zero.
class EllipticityViolation : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Re-pinning was asked to move the anchor orbit.
class AnchorMove : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Residue table has an entry on the anchor orbit or at a non-positive offset.
class NotAdmissible : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Divisor multiplicities do not sum to zero.
class DegreeViolation : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Denominator has an irreducible factor of degree > 1 over Q.
class UnsplitDenominator : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A formula would multiply two symbolic scalars together.
class SymbolicProduct : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace summa
