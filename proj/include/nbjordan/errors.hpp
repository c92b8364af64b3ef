#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nbj {

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (graph6 lines, CLI graph specs). Carries the byte
/// offset of the offending character within the input line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A precondition on the mathematical input failed: disconnected graph,
/// non-twin pair, dimension mismatch, eigenvalue zero, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Division by zero, or by an element that is not invertible because the
/// modulus was not irreducible.
class NonInvertibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Requested feature lies outside what is implemented (fields of degree > 2).
class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An identity that must hold by construction failed. Indicates a bug.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A computed result contradicts one of the structural theorems the library
/// checks (B/M Jordan equality, unicyclic classification, ...).
class TheoremViolation : public StructuralError {
 public:
  using StructuralError::StructuralError;
};

}  // namespace nbj
