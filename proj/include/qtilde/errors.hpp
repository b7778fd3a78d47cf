#pragma once

#include <stdexcept>
#include <string>

namespace qtilde {

/// Base class of all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Structural defects of a matrix or measure specification.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ColumnSumViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonPositiveEntry : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The product of the per-column maximum weights stays positive, so cylinder
/// lengths do not shrink to zero and the expansion does not identify points.
class Condition2Violation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class AlphabetMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DigitOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Cylinder log-length fell below the representable range before the
/// requested depth; the caller should lower the depth.
class DepthOverflow : public Error {
 public:
  using Error::Error;
};

class CoverTooLarge : public Error {
 public:
  using Error::Error;
};

/// A tail-rule combination the symbolic classifier does not support
/// (countable alphabets in classification, or unclassifiable pairs).
class IncompatibleTail : public Error {
 public:
  using Error::Error;
};

/// Convergence question asked of a generator-backed column sequence.
class UndeclaredTail : public Error {
 public:
  using Error::Error;
};

class NotConstantColumns : public Error {
 public:
  using Error::Error;
};

class DegenerateScales : public Error {
 public:
  using Error::Error;
};

class UndefinedRatio : public Error {
 public:
  using Error::Error;
};

/// Both the absolute-continuity product and the atom product came out
/// positive; the cases are mutually exclusive, so the spec (or the tail
/// taxonomy) is inconsistent.
class SpecInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace qtilde
