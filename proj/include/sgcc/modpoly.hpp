#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgcc/polynomial.hpp"

namespace sgcc {

/// Polynomial over the prime field GF(q), coefficients in {0..q-1}, lowest
/// degree first, trimmed.
class GfPoly {
 public:
  GfPoly(std::vector<std::uint64_t> coeffs, std::uint64_t prime);

  /// Reduces an integral polynomial mod q. DomainError if a coefficient is
  /// not an integer.
  static GfPoly from(const Polynomial& p, std::uint64_t prime);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::uint64_t prime() const { return q_; }
  const std::vector<std::uint64_t>& coefficients() const { return c_; }

  GfPoly operator-(const GfPoly& o) const;
  GfPoly operator*(const GfPoly& o) const;
  GfPoly operator%(const GfPoly& divisor) const;

  GfPoly monic() const;

  friend bool operator==(const GfPoly& a, const GfPoly& b) { return a.q_ == b.q_ && a.c_ == b.c_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<std::uint64_t> c_;
  std::uint64_t q_;
};

GfPoly gcd(GfPoly a, GfPoly b);

/// Outcome of testing an integral polynomial for irreducibility mod q.
struct ModIrreducibility {
  bool irreducible = false;
  /// When reducible: a proper monic factor exposed by gcd(p, t^(q^k) - t)
  /// for the smallest such k, or by the final Rabin divisibility check.
  std::optional<GfPoly> factor;
  int factor_k = 0;
};

/// Rabin's test over GF(q): p of degree n is irreducible iff p divides
/// t^(q^n) - t and gcd(p, t^(q^(n/d)) - t) = 1 for every prime d | n.
/// Requires q prime and the leading coefficient of p not divisible by q.
ModIrreducibility test_irreducible_mod(const Polynomial& p, std::uint64_t prime);

/// Smallest prime q <= max_prime such that p is irreducible mod q. A monic
/// integral polynomial irreducible mod some prime is irreducible over Q.
std::optional<std::uint64_t> irreducibility_prime(const Polynomial& p, std::uint64_t max_prime = 200);

bool is_prime(std::uint64_t n);

}  // namespace sgcc
