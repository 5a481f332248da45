#include "sgcc/conjugacy.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <random>
#include <stdexcept>

namespace sgcc {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void shuffle_block(std::vector<std::pair<std::size_t, std::size_t>>& block, const BijectionChoice& choice,
                   std::size_t side, std::size_t i, std::size_t j) {
  if (!choice.seed) return;
  const std::uint64_t s = *choice.seed;
  std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32U),
                    static_cast<std::uint32_t>(side), static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
  std::mt19937_64 rng(seq);
  std::shuffle(block.begin(), block.end(), rng);
}

}  // namespace

ElementaryConjugacy::ElementaryConjugacy(const IntMatrix& r, const IntMatrix& s, BijectionChoice choice) {
  const SseEdge<Integer> edge(r, s);
  if (!is_nonnegative(r) || !is_nonnegative(s)) throw DomainError("elementary conjugacy needs R, S over Z+");
  a_ = edge.source();
  b_ = edge.target();
  r_edges_ = EdgeList(r);
  s_edges_ = EdgeList(s);
  a_edges_ = EdgeList(a_);
  b_edges_ = EdgeList(b_);
  const std::size_t n = r.rows(), p = r.cols();
  const std::size_t nr = r_edges_.size(), ns = s_edges_.size();

  alpha_.assign(a_edges_.size(), {kNone, kNone});
  alpha_inv_.assign(nr * ns, kNone);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::pair<std::size_t, std::size_t>> paths;
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t rc = 0; rc < r_edges_.count(i, k); ++rc)
          for (std::size_t sc = 0; sc < s_edges_.count(k, j); ++sc)
            paths.emplace_back(r_edges_.index(i, k, rc), s_edges_.index(k, j, sc));
      shuffle_block(paths, choice, 0, i, j);
      for (std::size_t c = 0; c < paths.size(); ++c) {
        const std::size_t e = a_edges_.index(i, j, c);
        alpha_[e] = paths[c];
        alpha_inv_[pair_key(paths[c].first, paths[c].second, ns)] = e;
      }
    }

  beta_.assign(b_edges_.size(), {kNone, kNone});
  beta_inv_.assign(ns * nr, kNone);
  for (std::size_t k = 0; k < p; ++k)
    for (std::size_t l = 0; l < p; ++l) {
      std::vector<std::pair<std::size_t, std::size_t>> paths;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t sc = 0; sc < s_edges_.count(k, j); ++sc)
          for (std::size_t rc = 0; rc < r_edges_.count(j, l); ++rc)
            paths.emplace_back(s_edges_.index(k, j, sc), r_edges_.index(j, l, rc));
      shuffle_block(paths, choice, 1, k, l);
      for (std::size_t c = 0; c < paths.size(); ++c) {
        const std::size_t e = b_edges_.index(k, l, c);
        beta_[e] = paths[c];
        beta_inv_[pair_key(paths[c].first, paths[c].second, nr)] = e;
      }
    }
}

Word ElementaryConjugacy::apply(const Word& x) const {
  const std::size_t m = x.size();
  Word y(m);
  for (std::size_t t = 0; t < m; ++t) {
    const std::size_t s_t = alpha_.at(x[t]).second;
    const std::size_t r_next = alpha_.at(x[(t + 1) % m]).first;
    y[t] = beta_inv_[pair_key(s_t, r_next, r_edges_.size())];
    if (y[t] == kNone) throw std::logic_error("word is not a periodic point of the source shift");
  }
  return y;
}

Word ElementaryConjugacy::apply_inverse(const Word& y) const {
  const std::size_t m = y.size();
  Word x(m);
  for (std::size_t t = 0; t < m; ++t) {
    const std::size_t r_t = beta_.at(y[(t + m - 1) % m]).second;
    const std::size_t s_t = beta_.at(y[t]).first;
    x[t] = alpha_inv_[pair_key(r_t, s_t, s_edges_.size())];
    if (x[t] == kNone) throw std::logic_error("word is not a periodic point of the target shift");
  }
  return x;
}

PointMap step_map(const PathStep<Integer>& step, BijectionChoice choice) {
  auto c = std::make_shared<const ElementaryConjugacy>(step.edge, choice);
  if (step.orientation > 0) return {c->source(), c->target(), [c](const Word& w) { return c->apply(w); }};
  return {c->target(), c->source(), [c](const Word& w) { return c->apply_inverse(w); }};
}

PointMap path_map(const SsePath<Integer>& path, BijectionChoice choice) {
  if (path.empty()) throw ShapeError("empty path has no conjugacy");
  std::vector<PointMap> maps;
  for (std::size_t k = 0; k < path.size(); ++k) {
    const BijectionChoice step_choice = choice.seed ? BijectionChoice::seeded(*choice.seed + k) : choice;
    maps.push_back(step_map(path.steps()[k], step_choice));
  }
  PointMap out{maps.front().source, maps.back().target, {}};
  out.apply = [maps = std::move(maps)](const Word& w) {
    Word x = w;
    for (const auto& f : maps) x = f.apply(x);
    return x;
  };
  return out;
}

}  // namespace sgcc
