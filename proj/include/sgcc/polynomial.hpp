#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "sgcc/scalar.hpp"

namespace sgcc {

/// Univariate polynomial with rational coefficients, lowest degree first.
/// Trailing zero coefficients are trimmed, so the leading coefficient is
/// nonzero unless the polynomial is zero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients)
      : Polynomial(std::vector<Rational>(coefficients)) {}

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  /// The monomial t.
  static Polynomial variable() { return Polynomial({Rational(0), Rational(1)}); }

  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// True iff every coefficient is an integer.
  bool is_integral() const;

  /// Coefficient of t^k (zero beyond the degree).
  Rational coefficient(std::size_t k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& t) const;
  /// Value at t modulo an odd modulus; coefficient denominators are inverted
  /// mod the modulus (DomainError if impossible).
  Residue eval_mod(const Integer& t, std::int64_t modulus) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Human form, highest degree first, e.g. "t^7 - 23*t^4 + 1".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace sgcc
