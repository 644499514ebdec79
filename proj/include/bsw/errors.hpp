#pragma once

#include <stdexcept>
#include <string>

namespace bsw {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something malformed.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class InvalidDegreeSequence : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A functional (codimension, Hilbert numerator, multiplicity) evaluated on a
/// table where it has no value.
class UndefinedOnZero : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class DegenerateFamily : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class DegreeTooSmall : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class InvalidModel : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Mathematically well-formed input that falls outside what an operation accepts.
class MathRejection : public Error {
 public:
  using Error::Error;
};

/// The table is not a nonnegative combination of pure diagrams of one codimension.
class NotInCone : public MathRejection {
 public:
  using MathRejection::MathRejection;
};

class ShapeViolation : public MathRejection {
 public:
  using MathRejection::MathRejection;
};

/// Raised by the Koszul engine when a self-check fails: either a band that must
/// vanish for a valid curve model does not, or a differential squares to nonzero.
class ConsistencyError : public ShapeViolation {
 public:
  using ShapeViolation::ShapeViolation;
};

}  // namespace bsw
