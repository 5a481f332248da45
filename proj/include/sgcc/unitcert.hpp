#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgcc/linalg.hpp"
#include "sgcc/sse.hpp"

namespace sgcc {

/// A polynomial f(t) claimed to represent a unit of Z[t]/(p), p = char_poly(A).
struct UnitPolynomial {
  Polynomial f;
  std::string label;
};

/// (m, t) with m an odd prime and p(t) = 0 mod m. Evaluating at t gives a
/// ring map Z[t]/(p) -> GF(m).
class ResidueProbe {
 public:
  /// Throws DomainError unless m is an odd prime and p(t) = 0 mod m.
  ResidueProbe(const Polynomial& p, std::int64_t m, std::int64_t t);

  std::int64_t prime() const { return m_; }
  std::int64_t point() const { return t_; }

 private:
  std::int64_t m_;
  std::int64_t t_;
};

/// char_poly(f(A)) has integer coefficients and constant term +-1, so
/// det f(A) = +-1 and f(A) is an algebraic unit.
bool check_unit(const UnitPolynomial& f, const IntMatrix& a);

/// char_poly(f(A)), the witness behind check_unit.
Polynomial unit_char_poly(const UnitPolynomial& f, const IntMatrix& a);

/// (R, S) = (f(A), f(A)^{-1} A), an edge from A to A. Verifies R S = S R = A
/// and that every denominator is a power of one of `allowed_primes`
/// (DomainError otherwise).
SseEdge<Rational> unit_edge(const UnitPolynomial& f, const IntMatrix& a,
                            const std::vector<std::int64_t>& allowed_primes = {3});

/// f(t) mod m. DomainError if a coefficient denominator is divisible by m.
Residue probe_value(const Polynomial& f, const ResidueProbe& probe);

/// 0 if f(t) is a nonzero square mod m, 1 otherwise (Euler's criterion).
/// DomainError if f(t) = 0 mod m.
int residue_hom(const Polynomial& f, const ResidueProbe& probe);

/// Rows are probes, columns generators: M(i,j) = f_j(t_i), Q(i,j) = pi_i(f_j).
/// An M entry shows the exact value f_j(t_i) when that is an integer of
/// absolute value below m_i, and its residue in [0, m_i) otherwise.
struct GenerationCertificate {
  std::vector<std::vector<std::int64_t>> m;
  std::vector<std::vector<int>> q;
  bool invertible = false;  // det Q = 1 mod 2
};

GenerationCertificate generation_certificate(const std::vector<Polynomial>& generators,
                                             const std::vector<ResidueProbe>& probes);

/// Determinant of a 0/1 matrix over GF(2).
int det_mod2(const std::vector<std::vector<int>>& q);

}  // namespace sgcc
