#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "sgcc/matrix.hpp"

namespace sgcc {

/// Elementary strong shift equivalence (R, S) from R*S to S*R. The scalar
/// type is the ring: Integer for Z (and Z+), Residue for Z/L, Rational for
/// rationals with denominators prime to L.
template <class T>
class SseEdge {
 public:
  SseEdge(Matrix<T> r, Matrix<T> s) : r_(std::move(r)), s_(std::move(s)) {
    if (r_.cols() != s_.rows() || s_.cols() != r_.rows())
      throw ShapeError("SSE edge needs R n x p and S p x n, got R " + r_.shape_string() + " and S " +
                       s_.shape_string());
  }

  const Matrix<T>& R() const { return r_; }
  const Matrix<T>& S() const { return s_; }

  Matrix<T> source() const { return r_ * s_; }
  Matrix<T> target() const { return s_ * r_; }

  SseEdge swapped() const { return {s_, r_}; }
  SseEdge negated() const { return {-r_, -s_}; }

  friend bool operator==(const SseEdge& a, const SseEdge& b) { return a.r_ == b.r_ && a.s_ == b.s_; }

 private:
  Matrix<T> r_;
  Matrix<T> s_;
};

/// One traversal of an edge; orientation -1 runs from S*R back to R*S.
template <class T>
struct PathStep {
  SseEdge<T> edge;
  int orientation = 1;

  Matrix<T> start() const { return orientation > 0 ? edge.source() : edge.target(); }
  Matrix<T> end() const { return orientation > 0 ? edge.target() : edge.source(); }
};

template <class T>
class SsePath {
 public:
  SsePath() = default;
  /// Throws ShapeError if consecutive steps do not chain or an orientation
  /// is not +1/-1.
  explicit SsePath(std::vector<PathStep<T>> steps) : steps_(std::move(steps)) {
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      const int o = steps_[i].orientation;
      if (o != 1 && o != -1) throw ShapeError("orientation must be +1 or -1");
      if (i > 0 && !(steps_[i - 1].end() == steps_[i].start()))
        throw ShapeError("path steps " + std::to_string(i - 1) + " and " + std::to_string(i) + " do not chain");
    }
  }

  const std::vector<PathStep<T>>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  Matrix<T> start() const { return steps_.front().start(); }
  Matrix<T> end() const { return steps_.back().end(); }
  bool is_closed() const { return empty() || start() == end(); }

  SsePath reversed() const {
    std::vector<PathStep<T>> r;
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) r.push_back({it->edge, -it->orientation});
    return SsePath(std::move(r));
  }

  SsePath then(const SsePath& next) const {
    std::vector<PathStep<T>> all = steps_;
    all.insert(all.end(), next.steps_.begin(), next.steps_.end());
    return SsePath(std::move(all));
  }

 private:
  std::vector<PathStep<T>> steps_;
};

/// Three edges with R1 R2 = R3, R2 S3 = S1, S3 R1 = S2. The vertices are
/// R1 S1, R2 S2 (= S1 R1) and S2 R2 (= S3 R3).
template <class T>
struct Triangle {
  std::array<SseEdge<T>, 3> edges;

  bool identities_hold() const {
    const auto& [e1, e2, e3] = edges;
    return shapes_chain() && e1.R() * e2.R() == e3.R() && e2.R() * e3.S() == e1.S() &&
           e3.S() * e1.R() == e2.S();
  }

 private:
  bool shapes_chain() const {
    const auto& [e1, e2, e3] = edges;
    return e1.R().cols() == e2.R().rows() && e2.R().cols() == e3.S().rows() && e3.S().cols() == e1.R().rows() &&
           e3.R().rows() == e1.R().rows() && e3.R().cols() == e2.R().cols();
  }
};

}  // namespace sgcc
