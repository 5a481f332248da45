#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgcc/matrix.hpp"
#include "sgcc/sse.hpp"

namespace sgcc {

/// The cocycle is only implemented for m = 2, where entries matter mod 4.
struct CocycleConfig {
  static constexpr int m = 2;
  static constexpr std::int64_t L = 4;
};

/// sgc_2(R, S) in {0, 1}:
///
///   sum_{i<j, k>l} R_ik S_ki R_jl S_lj + sum_{i<j, k>=l} R_ik S_kj R_jl S_li
///     + sum_{i,k} R_ik (R_ik - 1)/2 * S_ki^2      (mod 2)
///
/// The value depends only on the entries mod 4. Residue input must be mod 4;
/// rational entries must have odd denominators (DomainError otherwise).
int sgc2_edge(const ModMatrix& r, const ModMatrix& s);
int sgc2_edge(const IntMatrix& r, const IntMatrix& s);
int sgc2_edge(const RatMatrix& r, const RatMatrix& s);

template <class T>
int sgc2_edge(const SseEdge<T>& e) {
  return sgc2_edge(e.R(), e.S());
}

/// Oriented sum of edge values; mod 2 the orientation does not change a term.
template <class T>
int sgc2_path(const SsePath<T>& path) {
  int total = 0;
  for (const auto& step : path.steps()) total += step.orientation * sgc2_edge(step.edge);
  return ((total % 2) + 2) % 2;
}

/// Completes seed matrices to a triangle through the Triangle Identities:
/// R3 = R1 R2, S1 = R2 S3, S2 = S3 R1. Needs R1 a x b, R2 b x c, S3 c x a.
template <class T>
Triangle<T> make_triangle(const Matrix<T>& r1, const Matrix<T>& r2, const Matrix<T>& s3) {
  if (r1.cols() != r2.rows() || r2.cols() != s3.rows() || s3.cols() != r1.rows())
    throw ShapeError("triangle seeds need R1 a x b, R2 b x c, S3 c x a; got " + r1.shape_string() + ", " +
                     r2.shape_string() + ", " + s3.shape_string());
  return Triangle<T>{{SseEdge<T>(r1, r2 * s3), SseEdge<T>(r2, s3 * r1), SseEdge<T>(r1 * r2, s3)}};
}

/// sgc2(e1) + sgc2(e2) - sgc2(e3) == 0 mod 2. Throws ShapeError if the
/// Triangle Identities fail.
template <class T>
bool check_triangle_cocycle(const Triangle<T>& t) {
  if (!t.identities_hold()) throw ShapeError("triangle identities do not hold");
  const int v = sgc2_edge(t.edges[0]) + sgc2_edge(t.edges[1]) - sgc2_edge(t.edges[2]);
  return v % 2 == 0;
}

/// The edge (-I, -A) at a vertex A.
template <class T>
SseEdge<T> minus_identity_edge(const Matrix<T>& a) {
  const T one = a.empty() ? T(1) : ScalarTraits<T>::one_like(a(0, 0));
  return {-Matrix<T>::identity(a.rows(), one), -a};
}

/// Sign of c in  v_A R = c v_B,  where v_A, v_B are the left eigenvectors of
/// the dominant roots of A = RS and B = SR, normalized so their first
/// significant entry is positive (entrywise positive for Perron matrices).
/// Power iteration in double precision; throws DomainError when the iteration
/// fails to certify a simple positive dominant root or |c| < tol.
int perron_sign(const RatMatrix& r, const RatMatrix& a, const RatMatrix& b, double tol = 1e-9);

/// sgc2(R, S) if perron_sign(R) > 0, else sgc2(-R, -S).
int sgcc2_edge(const RatMatrix& r, const RatMatrix& s, double tol = 1e-9);
int sgcc2_edge(const IntMatrix& r, const IntMatrix& s, double tol = 1e-9);

/// sgc2(P) + <sgc2(loop_1), ..., sgc2(loop_k)>, a coset in Z/2. Throws
/// ShapeError unless each loop is closed at the start of `path`.
template <class T>
std::set<int> rsgc2_coset(const SsePath<T>& path, const std::vector<SsePath<T>>& loops) {
  const int base = path.empty() ? 0 : sgc2_path(path);
  bool whole_group = false;
  for (const auto& loop : loops) {
    if (loop.empty()) continue;
    if (!loop.is_closed()) throw ShapeError("loop is not closed");
    if (!path.empty() && !(loop.start() == path.start()))
      throw ShapeError("loop is not based at the start of the path");
    whole_group = whole_group || sgc2_path(loop) == 1;
  }
  if (whole_group) return {0, 1};
  return {base};
}

/// Random triangles completed from seeds: seeds R1, R2, S3 with dimensions in
/// [1, dim_max] and entries in [0, entry_max] (mod 4 for the Z/4 ring).
enum class TriangleRing { ZPlus, Z4 };

struct TriangleSuiteResult {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<std::string> first_failure;
};

TriangleSuiteResult run_triangle_suite(std::size_t count, std::uint64_t seed, TriangleRing ring,
                                       std::size_t dim_max, unsigned entry_max);

}  // namespace sgcc
