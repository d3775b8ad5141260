#pragma once
/**
 * @file errors.hpp
 * @brief Exception taxonomy shared by every module of the library.
 */

#include <stdexcept>
#include <string>

namespace symnorm {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A multi-index has the wrong length, a negative entry, or is out of range.
class InvalidIndex : public Error {
 public:
  using Error::Error;
};

/// A multi-index does not sum to the owning tensor's degree.
class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// Vector / tensor shape disagreement.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Adjacency matrix is not a simple-graph adjacency (asymmetric, nonzero
/// diagonal, or no edges at all).
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// Polynomial arithmetic produced a non-finite coefficient.
class NumericOverflow : public Error {
 public:
  using Error::Error;
};

/// Degree below the minimum the two-variable pipeline supports (d >= 3).
class DegreeTooSmall : public Error {
 public:
  using Error::Error;
};

/// zv-u vanished but the form matches none of the catalogued exceptional
/// shapes; surfaced rather than guessed.
class UnclassifiedExceptional : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (identity verification, perturbed
/// problem still exceptional, ...). Indicates a bug or inconsistent input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Operation requires a nonzero tensor.
class ZeroTensor : public Error {
 public:
  using Error::Error;
};

/// Desk-scale cap exceeded (system size or total degree).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Entanglement distance requested for a tensor that is not a unit state.
class StateNormalizationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file (tensor JSON or edge list).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Command-line arguments are inconsistent with the input.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace symnorm
