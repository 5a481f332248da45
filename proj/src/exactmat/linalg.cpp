#include "sgcc/linalg.hpp"

#include <numeric>
#include <utility>

namespace sgcc {
namespace {

void require_square(const auto& a, const char* what) {
  if (!a.is_square()) throw ShapeError(std::string(what) + ": non-square matrix " + a.shape_string());
}

/// Berkowitz: coefficients of det(tI - A), highest degree first. Uses only
/// ring operations.
template <class T>
std::vector<T> berkowitz(const Matrix<T>& a, const T& one) {
  const std::size_t n = a.rows();
  const T zero = ScalarTraits<T>::zero_like(one);
  if (n == 0) return {one};
  std::vector<T> c{one, zero - a(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // q = (1, -a_rr, -R C, -R A_r C, ..., -R A_r^{r-1} C) for the leading r x r block A_r.
    std::vector<T> q(r + 2, zero);
    q[0] = one;
    q[1] = zero - a(r, r);
    std::vector<T> v(r, zero);
    for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      T dot = zero;
      for (std::size_t i = 0; i < r; ++i) dot += a(r, i) * v[i];
      q[k + 2] = zero - dot;
      if (k + 1 < r) {
        std::vector<T> next(r, zero);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) next[i] += a(i, j) * v[j];
        v = std::move(next);
      }
    }
    std::vector<T> next(r + 2, zero);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += q[i - j] * c[j];
    c = std::move(next);
  }
  return c;
}

template <class T>
Polynomial to_polynomial(const std::vector<T>& highest_first) {
  std::vector<Rational> low_first;
  low_first.reserve(highest_first.size());
  for (auto it = highest_first.rbegin(); it != highest_first.rend(); ++it) low_first.emplace_back(*it);
  return Polynomial(std::move(low_first));
}

}  // namespace

Integer det(const IntMatrix& a) {
  require_square(a, "det");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rational det(const RatMatrix& a) {
  require_square(a, "det");
  const std::size_t n = a.rows();
  RatMatrix m = a;
  Rational result = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(m(p, k)) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      result = -result;
    }
    result *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(m(i, k)) == 0) continue;
      const Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return result;
}

Residue det(const ModMatrix& a) {
  require_square(a, "det");
  const std::size_t n = a.rows();
  const Residue one = n == 0 ? Residue(1) : ScalarTraits<Residue>::one_like(a(0, 0));
  const auto c = berkowitz(a, one);
  return (n % 2 == 0) ? c.back() : -c.back();
}

Polynomial char_poly(const IntMatrix& a) {
  require_square(a, "char_poly");
  return to_polynomial(berkowitz(a, Integer(1)));
}

Polynomial char_poly(const RatMatrix& a) {
  require_square(a, "char_poly");
  return to_polynomial(berkowitz(a, Rational(1)));
}

RatMatrix inverse(const RatMatrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a(p, k)) == 0) ++p;
    if (p == n) throw DomainError("singular matrix");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    const Rational pivot = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || sgn(a(i, k)) == 0) continue;
      const Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

RatMatrix poly_eval_matrix(const Polynomial& f, const RatMatrix& a) {
  require_square(a, "poly_eval_matrix");
  const std::size_t n = a.rows();
  RatMatrix acc(n, n, Rational(0));
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * a;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

RatMatrix poly_eval_matrix(const Polynomial& f, const IntMatrix& a) { return poly_eval_matrix(f, to_rational(a)); }

std::optional<std::size_t> primitivity_exponent(const IntMatrix& a) {
  require_square(a, "is_primitive");
  if (!is_nonnegative(a)) throw DomainError("primitivity requires a nonnegative matrix");
  const std::size_t n = a.rows();
  if (n == 0) return std::nullopt;
  using Pattern = std::vector<std::vector<char>>;
  Pattern base(n, std::vector<char>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) base[i][j] = sgn(a(i, j)) > 0;
  const std::size_t bound = n * n - 2 * n + 2;
  Pattern p = base;
  for (std::size_t k = 1; k <= bound; ++k) {
    bool positive = true;
    for (const auto& row : p)
      for (char x : row) positive = positive && x;
    if (positive) return k;
    Pattern next(n, std::vector<char>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (p[i][l])
          for (std::size_t j = 0; j < n; ++j) next[i][j] |= base[l][j];
    p = std::move(next);
  }
  return std::nullopt;
}

bool is_irreducible(const IntMatrix& a) {
  require_square(a, "is_irreducible");
  if (!is_nonnegative(a)) throw DomainError("irreducibility requires a nonnegative matrix");
  const std::size_t n = a.rows();
  if (n == 0) return false;
  if (n == 1) return sgn(a(0, 0)) > 0;
  const auto reaches_all = [&](bool reversed) {
    std::vector<char> seen(n);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        const auto& entry = reversed ? a(w, v) : a(v, w);
        if (sgn(entry) > 0 && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return std::accumulate(seen.begin(), seen.end(), std::size_t{0}) == n;
  };
  return reaches_all(false) && reaches_all(true);
}

}  // namespace sgcc
