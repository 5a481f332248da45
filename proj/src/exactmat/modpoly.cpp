#include "sgcc/modpoly.hpp"

#include <sstream>

namespace sgcc {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  a %= q;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, a, q);
    a = mulmod(a, a, q);
    e >>= 1U;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) { return powmod(a, q - 2, q); }

/// x^(q^k) mod f, by k successive q-th powers.
GfPoly frobenius_power(const GfPoly& f, int k) {
  const std::uint64_t q = f.prime();
  GfPoly x = GfPoly({0, 1}, q) % f;
  for (int i = 0; i < k; ++i) {
    GfPoly result({1}, q), base = x;
    for (std::uint64_t e = q; e > 0; e >>= 1U) {
      if (e & 1U) result = (result * base) % f;
      base = (base * base) % f;
    }
    x = result;
  }
  return x;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

GfPoly::GfPoly(std::vector<std::uint64_t> coeffs, std::uint64_t prime) : c_(std::move(coeffs)), q_(prime) {
  if (!is_prime(prime)) throw DomainError(std::to_string(prime) + " is not prime");
  for (auto& x : c_) x %= q_;
  trim();
}

GfPoly GfPoly::from(const Polynomial& p, std::uint64_t prime) {
  if (!p.is_integral()) throw DomainError("polynomial over GF(q) needs integral coefficients");
  std::vector<std::uint64_t> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients())
    c.push_back(static_cast<std::uint64_t>(reduce(x.get_num(), static_cast<std::int64_t>(prime)).value()));
  return {std::move(c), prime};
}

void GfPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

GfPoly GfPoly::operator-(const GfPoly& o) const {
  std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t k = 0; k < r.size(); ++k) {
    const std::uint64_t a = k < c_.size() ? c_[k] : 0, b = k < o.c_.size() ? o.c_[k] : 0;
    r[k] = (a + q_ - b) % q_;
  }
  return {std::move(r), q_};
}

GfPoly GfPoly::operator*(const GfPoly& o) const {
  if (c_.empty() || o.c_.empty()) return {{}, q_};
  std::vector<std::uint64_t> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = (r[i + j] + mulmod(c_[i], o.c_[j], q_)) % q_;
  return {std::move(r), q_};
}

GfPoly GfPoly::operator%(const GfPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<std::uint64_t> r = c_;
  const std::size_t dd = divisor.c_.size() - 1;
  const std::uint64_t lead_inv = inv_mod(divisor.c_.back(), q_);
  while (r.size() > dd) {
    if (r.back() == 0) {
      r.pop_back();
      continue;
    }
    const std::uint64_t f = mulmod(r.back(), lead_inv, q_);
    const std::size_t shift = r.size() - 1 - dd;
    for (std::size_t k = 0; k <= dd; ++k)
      r[shift + k] = (r[shift + k] + q_ - mulmod(f, divisor.c_[k], q_)) % q_;
    r.pop_back();
  }
  return {std::move(r), q_};
}

GfPoly GfPoly::monic() const {
  if (c_.empty()) return *this;
  const std::uint64_t inv = inv_mod(c_.back(), q_);
  std::vector<std::uint64_t> r = c_;
  for (auto& x : r) x = mulmod(x, inv, q_);
  return {std::move(r), q_};
}

std::string GfPoly::to_string(const std::string& var) const {
  std::vector<Rational> c(c_.begin(), c_.end());
  return Polynomial(std::move(c)).to_string(var);
}

GfPoly gcd(GfPoly a, GfPoly b) {
  while (!b.is_zero()) {
    GfPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ModIrreducibility test_irreducible_mod(const Polynomial& p, std::uint64_t prime) {
  const GfPoly f = GfPoly::from(p, prime);
  if (f.degree() != p.degree())
    throw DomainError("leading coefficient vanishes mod " + std::to_string(prime));
  const int n = f.degree();
  ModIrreducibility out;
  if (n <= 0) return out;
  const GfPoly t({0, 1}, prime);
  // Any reducible p has an irreducible factor of degree k <= n/2, and such a
  // factor divides t^(q^k) - t.
  for (int k = 1; 2 * k <= n; ++k) {
    const GfPoly g = gcd(f, frobenius_power(f, k) - t);
    if (g.degree() > 0) {
      out.factor = g;
      out.factor_k = k;
      return out;
    }
  }
  if (!(frobenius_power(f, n) == t % f)) return out;
  out.irreducible = true;
  return out;
}

std::optional<std::uint64_t> irreducibility_prime(const Polynomial& p, std::uint64_t max_prime) {
  for (std::uint64_t q = 2; q <= max_prime; ++q) {
    if (!is_prime(q)) continue;
    if (reduce(p.leading().get_num(), static_cast<std::int64_t>(q)).is_zero()) continue;
    if (test_irreducible_mod(p, q).irreducible) return q;
  }
  return std::nullopt;
}

}  // namespace sgcc
