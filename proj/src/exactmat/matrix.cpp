#include "sgcc/matrix.hpp"

namespace sgcc {

RatMatrix to_rational(const IntMatrix& m) {
  return m.map([](const Integer& x) { return Rational(x); });
}

bool is_integral(const RatMatrix& m) {
  for (const auto& x : m.entries())
    if (x.get_den() != 1) return false;
  return true;
}

IntMatrix to_integer(const RatMatrix& m) {
  return m.map([](const Rational& x) {
    if (x.get_den() != 1) throw DomainError("entry " + x.get_str() + " is not an integer");
    return Integer(x.get_num());
  });
}

ModMatrix mod_reduce(const RatMatrix& m, std::int64_t modulus) {
  return m.map([modulus](const Rational& x) { return reduce(x, modulus); });
}

ModMatrix mod_reduce(const IntMatrix& m, std::int64_t modulus) {
  return m.map([modulus](const Integer& x) { return reduce(x, modulus); });
}

bool is_nonnegative(const IntMatrix& m) {
  for (const auto& x : m.entries())
    if (sgn(x) < 0) return false;
  return true;
}

}  // namespace sgcc
