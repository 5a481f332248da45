#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "sgcc/errors.hpp"

namespace sgcc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Element of Z/L. Values are kept in {0..L-1}.
///
/// A residue with modulus 0 is an unbound integer constant (what
/// `Residue{}` or `Residue(0)` produce); it adopts the modulus of whatever
/// it is combined with. Combining two different nonzero moduli throws.
class Residue {
 public:
  Residue() = default;
  Residue(std::int64_t value, std::int64_t modulus = 0);  // NOLINT(google-explicit-constructor)

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;
  Residue& operator+=(const Residue& o) { return *this = *this + o; }
  Residue& operator-=(const Residue& o) { return *this = *this - o; }
  Residue& operator*=(const Residue& o) { return *this = *this * o; }

  /// Throws DomainError if the value is not a unit modulo L.
  Residue inverse() const;
  Residue pow(std::uint64_t e) const;

  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const Residue& a, const Residue& b);

  /// Representative in (-L/2, L/2].
  std::int64_t symmetric() const;

  friend std::ostream& operator<<(std::ostream& os, const Residue& r) { return os << r.value_; }

 private:
  static std::int64_t combine_modulus(std::int64_t a, std::int64_t b);

  std::int64_t value_ = 0;
  std::int64_t modulus_ = 0;
};

/// Reduces an integer into {0..L-1}.
Residue reduce(const Integer& x, std::int64_t modulus);

/// num * den^{-1} mod L. Throws DomainError if gcd(den, L) != 1.
Residue reduce(const Rational& x, std::int64_t modulus);

/// Parses "p", "-p" or "p/q" into a normalized rational. Throws InputError.
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);
std::string to_string(const Residue& x);

/// Scalar-domain helpers used by the generic matrix algorithms.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Integer> {
  static Integer zero_like(const Integer&) { return 0; }
  static Integer one_like(const Integer&) { return 1; }
  static bool is_zero(const Integer& x) { return sgn(x) == 0; }
};

template <>
struct ScalarTraits<Rational> {
  static Rational zero_like(const Rational&) { return 0; }
  static Rational one_like(const Rational&) { return 1; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
};

template <>
struct ScalarTraits<Residue> {
  static Residue zero_like(const Residue& x) { return Residue(0, x.modulus()); }
  static Residue one_like(const Residue& x) { return Residue(1, x.modulus()); }
  static bool is_zero(const Residue& x) { return x.is_zero(); }
};

}  // namespace sgcc
