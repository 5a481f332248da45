#include "sgcc/scalar.hpp"

#include <cctype>

namespace sgcc {
namespace {

std::int64_t normalize(std::int64_t v, std::int64_t m) {
  if (m == 0) return v;
  v %= m;
  return v < 0 ? v + m : v;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

}  // namespace

Residue::Residue(std::int64_t value, std::int64_t modulus) : value_(value), modulus_(modulus) {
  if (modulus < 0) throw DomainError("negative modulus");
  value_ = normalize(value, modulus);
}

std::int64_t Residue::combine_modulus(std::int64_t a, std::int64_t b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw DomainError("residue moduli differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

Residue Residue::operator+(const Residue& o) const {
  const auto m = combine_modulus(modulus_, o.modulus_);
  const auto a = normalize(value_, m), b = normalize(o.value_, m);
  return {m == 0 ? a + b : normalize(a + b, m), m};
}

Residue Residue::operator-(const Residue& o) const { return *this + (-o); }

Residue Residue::operator-() const { return {-value_, modulus_}; }

Residue Residue::operator*(const Residue& o) const {
  const auto m = combine_modulus(modulus_, o.modulus_);
  if (m == 0) return {value_ * o.value_, 0};
  return {mul_mod(normalize(value_, m), normalize(o.value_, m), m), m};
}

Residue Residue::inverse() const {
  if (modulus_ == 0) throw DomainError("inverse of an unbound residue");
  std::int64_t r0 = modulus_, r1 = value_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1)
    throw DomainError(std::to_string(value_) + " is not invertible mod " + std::to_string(modulus_));
  return {s0, modulus_};
}

Residue Residue::pow(std::uint64_t e) const {
  Residue result(1, modulus_), base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

std::int64_t Residue::symmetric() const {
  if (modulus_ == 0) return value_;
  return value_ > modulus_ / 2 ? value_ - modulus_ : value_;
}

bool operator==(const Residue& a, const Residue& b) {
  const auto m = a.modulus_ == 0 ? b.modulus_ : a.modulus_;
  if (a.modulus_ != 0 && b.modulus_ != 0 && a.modulus_ != b.modulus_) return false;
  return normalize(a.value_, m) == normalize(b.value_, m);
}

Residue reduce(const Integer& x, std::int64_t modulus) {
  if (modulus <= 0) throw DomainError("modulus must be positive");
  Integer r = x % Integer(static_cast<long>(modulus));
  if (sgn(r) < 0) r += static_cast<long>(modulus);
  return {r.get_si(), modulus};
}

Residue reduce(const Rational& x, std::int64_t modulus) {
  const Residue den = reduce(x.get_den(), modulus);
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_den().get_mpz_t(), Integer(static_cast<long>(modulus)).get_mpz_t());
  if (g != 1)
    throw DomainError("denominator " + x.get_den().get_str() + " is not coprime to modulus " +
                      std::to_string(modulus));
  return reduce(x.get_num(), modulus) * den.inverse();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  if (slash == std::string::npos) {
    if (!valid_int(text)) throw InputError("not an integer or fraction: \"" + text + "\"");
    return Rational(Integer(strip_plus(text)));
  }
  const std::string num = text.substr(0, slash), den = text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw InputError("not an integer or fraction: \"" + text + "\"");
  Integer d(strip_plus(den));
  if (d == 0) throw InputError("zero denominator in \"" + text + "\"");
  Rational r(Integer(strip_plus(num)), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const Residue& x) { return std::to_string(x.value()); }

}  // namespace sgcc
