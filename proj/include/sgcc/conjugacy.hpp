#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sgcc/edge_shift.hpp"
#include "sgcc/sse.hpp"

namespace sgcc {

/// How the bijections between A-edges and RS-paths (and B-edges and
/// SR-paths) are chosen. Canonical pairs edges i -> j in copy order with the
/// two-edge paths i -> j sorted by (r-edge, s-edge); seeded applies a
/// deterministic shuffle per (i, j) block.
struct BijectionChoice {
  std::optional<std::uint64_t> seed;

  static BijectionChoice canonical() { return {}; }
  static BijectionChoice seeded(std::uint64_t s) { return {s}; }
};

/// The conjugacy c : X_{RS} -> X_{SR} of an elementary SSE over Z+, acting on
/// periodic points. Each A-edge is split into an (r, s) pair, the pairs are
/// regrouped as (s_t, r_{t+1}), and each pair is read back as a B-edge.
class ElementaryConjugacy {
 public:
  /// Throws DomainError on negative entries, ShapeError on bad dimensions.
  ElementaryConjugacy(const IntMatrix& r, const IntMatrix& s, BijectionChoice choice = BijectionChoice::canonical());
  explicit ElementaryConjugacy(const SseEdge<Integer>& edge, BijectionChoice choice = BijectionChoice::canonical())
      : ElementaryConjugacy(edge.R(), edge.S(), choice) {}

  const IntMatrix& source() const { return a_; }
  const IntMatrix& target() const { return b_; }

  Word apply(const Word& x) const;
  Word apply_inverse(const Word& y) const;

 private:
  std::size_t pair_key(std::size_t first, std::size_t second, std::size_t second_count) const {
    return first * second_count + second;
  }

  IntMatrix a_, b_;
  EdgeList r_edges_, s_edges_, a_edges_, b_edges_;
  // alpha: A-edge -> (r, s); beta: B-edge -> (s, r).
  std::vector<std::pair<std::size_t, std::size_t>> alpha_, beta_;
  std::vector<std::size_t> alpha_inv_, beta_inv_;
};

/// A map between periodic points of two edge shifts.
struct PointMap {
  IntMatrix source;
  IntMatrix target;
  std::function<Word(const Word&)> apply;
};

/// The conjugacy of an elementary SSE, or its inverse for orientation -1.
PointMap step_map(const PathStep<Integer>& step, BijectionChoice choice = BijectionChoice::canonical());

/// Composite of the step conjugacies along a Z+ path. Step k uses seed + k
/// when the choice is seeded.
PointMap path_map(const SsePath<Integer>& path, BijectionChoice choice = BijectionChoice::canonical());

}  // namespace sgcc
