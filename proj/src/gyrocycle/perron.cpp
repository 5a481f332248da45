#include <algorithm>
#include <cmath>
#include <vector>

#include "sgcc/gyrocycle.hpp"

namespace sgcc {
namespace {

using Dense = std::vector<std::vector<double>>;

// 2^64 steps of plain power iteration.
constexpr int kMaxSquarings = 64;

Dense to_dense(const RatMatrix& m) {
  Dense d(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j).get_d();
  return d;
}

Dense multiply(const Dense& x, const Dense& y) {
  const std::size_t n = x.size(), k = y.size(), m = y.empty() ? 0 : y[0].size();
  Dense r(n, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) r[i][j] += x[i][l] * y[l][j];
  return r;
}

Dense transpose(const Dense& x) {
  Dense t(x.empty() ? 0 : x[0].size(), std::vector<double>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x[i].size(); ++j) t[j][i] = x[i][j];
  return t;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<double> row_times(const std::vector<double>& v, const Dense& m) {
  std::vector<double> out(m.empty() ? 0 : m[0].size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += v[i] * m[i][j];
  return out;
}

/// Flips v so that its first entry of magnitude > tol is positive, after
/// scaling to unit max-norm.
void normalize(std::vector<double>& v, double tol) {
  const double scale = max_abs(v);
  for (double& x : v) x /= scale;
  for (double x : v)
    if (std::abs(x) > tol) {
      if (x < 0)
        for (double& y : v) y = -y;
      return;
    }
}

struct Dominant {
  double root;
  std::vector<double> left;  // v with v M = root v
};

/// Left eigenvector of the dominant root by repeated squaring of M: row
/// vectors of M^(2^k) line up with the dominant left eigenvector when that
/// root strictly dominates in modulus. The root's sign and the eigen-residual
/// are checked afterwards, since squaring hides a negative root.
Dominant dominant_left(const Dense& m, double tol, const char* which) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError(std::string("empty matrix ") + which);
  Dense power = m;
  // A generic positive start vector, so that a non-dominant eigenvector is
  // not hit by accident (e.g. the all-ones vector for a permutation matrix).
  std::vector<double> start(n);
  for (std::size_t i = 0; i < n; ++i) start[i] = 1.0 + 1.0 / static_cast<double>(i + 3);
  std::vector<double> v = start, prev;
  bool converged = false;
  for (int iter = 0; iter < kMaxSquarings && !converged; ++iter) {
    prev = v;
    double scale = 0.0;
    for (const auto& row : power) scale = std::max(scale, max_abs(row));
    if (scale == 0.0 || !std::isfinite(scale))
      throw DomainError(std::string("no dominant root for ") + which);
    for (auto& row : power)
      for (double& x : row) x /= scale;
    v = row_times(start, power);
    if (max_abs(v) == 0.0) throw DomainError(std::string("no dominant root for ") + which);
    normalize(v, tol);
    if (iter > 0) {
      double diff = 0.0;
      for (std::size_t i = 0; i < n; ++i) diff = std::max(diff, std::abs(v[i] - prev[i]));
      converged = diff < tol;
    }
    if (!converged) power = multiply(power, power);
  }
  if (!converged) throw DomainError(std::string("power iteration did not converge for ") + which);

  const auto image = row_times(v, m);
  const std::size_t j = static_cast<std::size_t>(
      std::max_element(v.begin(), v.end(), [](double a, double b) { return std::abs(a) < std::abs(b); }) - v.begin());
  const double root = image[j] / v[j];
  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(image[i] - root * v[i]));
  if (root <= tol || residual > 1e3 * tol * std::max(1.0, std::abs(root)))
    throw DomainError(std::string("no simple positive dominant root for ") + which);
  return {root, v};
}

void require_simple(const Dense& m, const Dominant& left, double tol, const char* which) {
  // A simple eigenvalue has non-orthogonal left and right eigenvectors; a
  // defective one does not.
  const Dominant right = dominant_left(transpose(m), tol, which);
  double dot = 0.0;
  for (std::size_t i = 0; i < left.left.size(); ++i) dot += left.left[i] * right.left[i];
  if (std::abs(dot) <= tol * max_abs(left.left) * max_abs(right.left))
    throw DomainError(std::string("dominant root is not simple for ") + which);
}

}  // namespace

int perron_sign(const RatMatrix& r, const RatMatrix& a, const RatMatrix& b, double tol) {
  if (!a.is_square() || !b.is_square() || r.rows() != a.rows() || r.cols() != b.rows())
    throw ShapeError("perron_sign needs R n x p with A n x n and B p x p");
  const Dense da = to_dense(a), db = to_dense(b);
  const Dominant va = dominant_left(da, tol, "A"), vb = dominant_left(db, tol, "B");
  require_simple(da, va, tol, "A");
  require_simple(db, vb, tol, "B");
  const auto image = row_times(va.left, to_dense(r));
  const std::size_t j = static_cast<std::size_t>(
      std::max_element(vb.left.begin(), vb.left.end(), [](double x, double y) { return std::abs(x) < std::abs(y); }) -
      vb.left.begin());
  const double c = image[j] / vb.left[j];
  if (std::abs(c) < tol) throw DomainError("ambiguous Perron sign: |c| below tolerance");
  double residual = 0.0;
  for (std::size_t i = 0; i < image.size(); ++i) residual = std::max(residual, std::abs(image[i] - c * vb.left[i]));
  if (residual > 1e3 * tol * std::max(1.0, std::abs(c)))
    throw DomainError("v_A R is not proportional to v_B");
  return c > 0 ? 1 : -1;
}

int sgcc2_edge(const RatMatrix& r, const RatMatrix& s, double tol) {
  const SseEdge<Rational> e(r, s);
  if (perron_sign(r, e.source(), e.target(), tol) > 0) return sgc2_edge(r, s);
  return sgc2_edge(RatMatrix(-r), RatMatrix(-s));
}

int sgcc2_edge(const IntMatrix& r, const IntMatrix& s, double tol) {
  return sgcc2_edge(to_rational(r), to_rational(s), tol);
}

}  // namespace sgcc
