#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sgcc/matrix.hpp"

namespace sgcc {

struct Edge {
  std::size_t source;
  std::size_t target;
  std::size_t copy;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// The edges of a nonnegative integer matrix M: M(i,j) copies of i -> j,
/// listed in (source, target, copy) order. Works for rectangular M, whose
/// edges run between two different vertex sets.
class EdgeList {
 public:
  EdgeList() = default;
  /// Throws DomainError on negative entries or absurdly large counts.
  explicit EdgeList(const IntMatrix& m);

  std::size_t size() const { return edges_.size(); }
  const Edge& operator[](std::size_t k) const { return edges_[k]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Index of the first edge i -> j and the number of such edges.
  std::size_t first(std::size_t i, std::size_t j) const { return offset_[i * cols_ + j]; }
  std::size_t count(std::size_t i, std::size_t j) const { return offset_[i * cols_ + j + 1] - offset_[i * cols_ + j]; }
  std::size_t index(std::size_t i, std::size_t j, std::size_t copy) const { return first(i, j) + copy; }

  /// Indices [begin, end) of all edges leaving vertex i.
  std::size_t out_begin(std::size_t i) const { return offset_[i * cols_]; }
  std::size_t out_end(std::size_t i) const { return offset_[(i + 1) * cols_]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offset_{0};
};

/// A point of a periodic orbit, as its repeating block of edge indices:
/// word w stands for the bi-infinite sequence with x_t = w[t mod |w|].
using Word = std::vector<std::size_t>;

}  // namespace sgcc
