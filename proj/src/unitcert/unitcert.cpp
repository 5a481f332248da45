#include "sgcc/unitcert.hpp"

#include "sgcc/modpoly.hpp"

namespace sgcc {
namespace {

bool denominator_allowed(Integer den, const std::vector<std::int64_t>& primes) {
  for (std::int64_t q : primes) {
    const Integer qq(static_cast<long>(q));
    while (den % qq == 0) den /= qq;
  }
  return den == 1;
}

}  // namespace

ResidueProbe::ResidueProbe(const Polynomial& p, std::int64_t m, std::int64_t t) : m_(m), t_(t) {
  if (m <= 2 || !is_prime(static_cast<std::uint64_t>(m)))
    throw DomainError("probe modulus " + std::to_string(m) + " is not an odd prime");
  if (!p.eval_mod(Integer(static_cast<long>(t)), m).is_zero())
    throw DomainError("p(" + std::to_string(t) + ") is not 0 mod " + std::to_string(m));
}

Polynomial unit_char_poly(const UnitPolynomial& f, const IntMatrix& a) { return char_poly(poly_eval_matrix(f.f, a)); }

bool check_unit(const UnitPolynomial& f, const IntMatrix& a) {
  const Polynomial cp = unit_char_poly(f, a);
  return cp.is_integral() && abs(cp.coefficient(0)) == 1;
}

SseEdge<Rational> unit_edge(const UnitPolynomial& f, const IntMatrix& a, const std::vector<std::int64_t>& allowed_primes) {
  const RatMatrix ar = to_rational(a);
  const RatMatrix r = poly_eval_matrix(f.f, ar);
  const RatMatrix s = inverse(r) * ar;
  SseEdge<Rational> edge(r, s);
  if (!(edge.source() == ar) || !(edge.target() == ar))
    throw DomainError(f.label + ": R S = S R = A fails");
  for (const auto* m : {&r, &s})
    for (const Rational& x : m->entries())
      if (!denominator_allowed(x.get_den(), allowed_primes))
        throw DomainError(f.label + ": entry " + x.get_str() + " has a denominator outside the allowed primes");
  return edge;
}

Residue probe_value(const Polynomial& f, const ResidueProbe& probe) {
  return f.eval_mod(Integer(static_cast<long>(probe.point())), probe.prime());
}

int residue_hom(const Polynomial& f, const ResidueProbe& probe) {
  const Residue v = probe_value(f, probe);
  if (v.is_zero())
    throw DomainError("f(" + std::to_string(probe.point()) + ") = 0 mod " + std::to_string(probe.prime()));
  const Residue euler = v.pow(static_cast<std::uint64_t>((probe.prime() - 1) / 2));
  return euler.value() == 1 ? 0 : 1;
}

int det_mod2(const std::vector<std::vector<int>>& q) {
  const std::size_t n = q.size();
  ModMatrix m(n, n, Residue(0, 2));
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i].size() != n) throw ShapeError("det_mod2 needs a square matrix");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Residue(q[i][j], 2);
  }
  return static_cast<int>(det(m).value());
}

GenerationCertificate generation_certificate(const std::vector<Polynomial>& generators,
                                             const std::vector<ResidueProbe>& probes) {
  GenerationCertificate cert;
  for (const auto& probe : probes) {
    std::vector<std::int64_t> m_row;
    std::vector<int> q_row;
    for (const auto& g : generators) {
      const Rational exact = g(Rational(static_cast<long>(probe.point())));
      if (exact.get_den() == 1 && abs(exact.get_num()) < probe.prime())
        m_row.push_back(exact.get_num().get_si());
      else
        m_row.push_back(probe_value(g, probe).value());
      q_row.push_back(residue_hom(g, probe));
    }
    cert.m.push_back(std::move(m_row));
    cert.q.push_back(std::move(q_row));
  }
  cert.invertible = cert.q.size() == generators.size() && det_mod2(cert.q) == 1;
  return cert;
}

}  // namespace sgcc
