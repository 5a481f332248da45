#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sgcc/matrix.hpp"
#include "sgcc/polynomial.hpp"

namespace sgcc {

// Determinants. Integer input uses fraction-free Bareiss elimination,
// rational input Gaussian elimination, residues the division-free
// Berkowitz recurrence (valid over any commutative ring such as Z/4).
Integer det(const IntMatrix& a);
Rational det(const RatMatrix& a);
Residue det(const ModMatrix& a);

/// det(tI - A), computed exactly with the Berkowitz algorithm.
Polynomial char_poly(const IntMatrix& a);
Polynomial char_poly(const RatMatrix& a);

/// Exact inverse by Gauss-Jordan elimination. DomainError("singular") when det = 0.
RatMatrix inverse(const RatMatrix& m);

/// f(A) = sum_k f_k A^k, by Horner's rule.
RatMatrix poly_eval_matrix(const Polynomial& f, const RatMatrix& a);
RatMatrix poly_eval_matrix(const Polynomial& f, const IntMatrix& a);

template <class T>
Matrix<T> power(const Matrix<T>& a, std::uint64_t k) {
  if (!a.is_square()) throw ShapeError("power of non-square matrix " + a.shape_string());
  const T one = a.empty() ? T(1) : ScalarTraits<T>::one_like(a(0, 0));
  Matrix<T> result = Matrix<T>::identity(a.rows(), one);
  Matrix<T> base = a;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

template <class T>
T trace(const Matrix<T>& a) {
  if (!a.is_square()) throw ShapeError("trace of non-square matrix " + a.shape_string());
  T t = a.empty() ? T(0) : ScalarTraits<T>::zero_like(a(0, 0));
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

/// tr(A^m).
template <class T>
T trace_power(const Matrix<T>& a, std::uint64_t m) {
  return trace(power(a, m));
}

/// Smallest k with A^k strictly positive, searched up to Wielandt's bound
/// n^2 - 2n + 2; nullopt if A is not primitive. DomainError on negative entries.
std::optional<std::size_t> primitivity_exponent(const IntMatrix& a);
inline bool is_primitive(const IntMatrix& a) { return primitivity_exponent(a).has_value(); }

/// Irreducible as a nonnegative matrix: the digraph is strongly connected.
bool is_irreducible(const IntMatrix& a);

}  // namespace sgcc
