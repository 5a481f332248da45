#pragma once

#include <stdexcept>
#include <string>

namespace sgcc {

/// Operand shapes are incompatible (non-square input, product dimension
/// mismatch, broken path chaining).
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value lies outside an operation's domain: singular matrix, a denominator
/// that is not invertible modulo L, a negative entry where nonnegativity is
/// required, mismatched residue moduli.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed external input (JSON files, command-line values).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sgcc
