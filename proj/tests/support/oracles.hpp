#pragma once

// Independent reference implementations used by the tests. Nothing here
// calls into the routines it checks.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "sgcc/matrix.hpp"
#include "sgcc/polynomial.hpp"
#include "sgcc/sse.hpp"

namespace sgcc::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Integer(static_cast<long>(uniform(rng, lo, hi)));
  return m;
}

/// Entries p/q with q odd in [1, 9].
inline RatMatrix random_odd_rational_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Rational v(static_cast<long>(uniform(rng, -9, 9)), static_cast<unsigned long>(2 * uniform(rng, 0, 4) + 1));
      v.canonicalize();
      m(i, j) = v;
    }
  return m;
}

template <class T>
Matrix<T> naive_product(const Matrix<T>& x, const Matrix<T>& y) {
  Matrix<T> out(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j) {
      T acc = 0;
      for (std::size_t k = 0; k < x.cols(); ++k) acc += x(i, k) * y(k, j);
      out(i, j) = acc;
    }
  return out;
}

/// Laplace expansion along the first row; T needs +, -, * and construction from 0/1.
template <class T>
T cofactor_det(const std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  T total = m[0][0] - m[0][0];
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<T>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const T term = m[0][c] * cofactor_det(minor);
    total = c % 2 == 0 ? T(total + term) : T(total - term);
  }
  return total;
}

inline Integer cofactor_det(const IntMatrix& a) {
  std::vector<std::vector<Integer>> m(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return cofactor_det(m);
}

/// det(tI - A) by symbolic cofactor expansion.
inline Polynomial cofactor_char_poly(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = i == j ? Polynomial({Rational(-a(i, j)), Rational(1)}) : Polynomial({Rational(-a(i, j))});
  return cofactor_det(m);
}

/// Primitive iff the digraph is strongly connected and its cycle lengths
/// have gcd 1 (period computed from BFS levels).
inline bool oracle_primitive(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return false;
  auto reach_all = [&](bool transposed) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        const bool edge = transposed ? sgn(a(v, u)) > 0 : sgn(a(u, v)) > 0;
        if (edge && !seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  if (!reach_all(false) || !reach_all(true)) return false;
  std::vector<long> level(n, -1);
  level[0] = 0;
  std::vector<std::size_t> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::size_t u = queue[q];
    for (std::size_t v = 0; v < n; ++v)
      if (sgn(a(u, v)) > 0 && level[v] < 0) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
  }
  long g = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (sgn(a(u, v)) > 0) g = std::gcd(g, std::labs(level[u] + 1 - level[v]));
  return g == 1;
}

/// Number of closed walks of length m: sum over vertex cycles of the
/// product of edge multiplicities.
inline Integer closed_walk_count(const IntMatrix& a, std::size_t m) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> seq(m, 0);
  Integer total = 0;
  while (true) {
    Integer prod = 1;
    for (std::size_t t = 0; t < m && sgn(prod) != 0; ++t) prod *= a(seq[t], seq[(t + 1) % m]);
    total += prod;
    std::size_t k = 0;
    while (k < m && ++seq[k] == n) seq[k++] = 0;
    if (k == m) break;
  }
  return total;
}

/// Random out-split of a nonnegative square Z: Z = D E with D an n x p
/// division matrix (one 1 per column, every row hit) and E spreading each
/// row of Z over the columns of its group.
inline SseEdge<Integer> random_out_split(Rng& rng, const IntMatrix& z, std::size_t extra) {
  const std::size_t n = z.rows();
  const std::size_t p = n + extra;
  std::vector<std::size_t> owner(p);
  for (std::size_t k = 0; k < p; ++k) owner[k] = k < n ? k : static_cast<std::size_t>(uniform(rng, 0, n - 1));
  IntMatrix d(n, p), e(p, n);
  for (std::size_t k = 0; k < p; ++k) d(owner[k], k) = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> group;
    for (std::size_t k = 0; k < p; ++k)
      if (owner[k] == i) group.push_back(k);
    for (std::size_t j = 0; j < n; ++j) {
      long remaining = z(i, j).get_si();
      for (std::size_t g = 0; g + 1 < group.size(); ++g) {
        const long take = uniform(rng, 0, remaining);
        e(group[g], j) = take;
        remaining -= take;
      }
      e(group.back(), j) = remaining;
    }
  }
  return {d, e};
}

/// In-split: Z = E^T D^T for an out-split Z^T = D E.
inline SseEdge<Integer> random_in_split(Rng& rng, const IntMatrix& z, std::size_t extra) {
  const auto out = random_out_split(rng, z.transpose(), extra);
  return {out.S().transpose(), out.R().transpose()};
}

/// A closed Z+ path P L P^{-1} at `a`: P is a walk of random state splittings,
/// L a product of swap loops (R, S)(S, R) at the end of P.
inline SsePath<Integer> random_closed_path(Rng& rng, const IntMatrix& a, std::size_t prefix_len, std::size_t loops) {
  std::vector<PathStep<Integer>> prefix;
  IntMatrix z = a;
  for (std::size_t k = 0; k < prefix_len; ++k) {
    const std::size_t extra = static_cast<std::size_t>(uniform(rng, 0, 1));
    const auto e = uniform(rng, 0, 1) ? random_out_split(rng, z, extra) : random_in_split(rng, z, extra);
    prefix.push_back({e, 1});
    z = e.target();
  }
  std::vector<PathStep<Integer>> steps = prefix;
  for (std::size_t k = 0; k < loops; ++k) {
    const auto e = uniform(rng, 0, 1) ? random_out_split(rng, z, 1) : random_in_split(rng, z, 1);
    steps.push_back({e, 1});
    steps.push_back({e.swapped(), 1});
  }
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) steps.push_back({it->edge, -1});
  return SsePath<Integer>(std::move(steps));
}

}  // namespace sgcc::testing
