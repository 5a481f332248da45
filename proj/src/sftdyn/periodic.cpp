#include "sgcc/periodic.hpp"

#include <algorithm>
#include <set>

#include "sgcc/linalg.hpp"

namespace sgcc {

std::vector<Word> enumerate_period_points(const IntMatrix& a, std::size_t m, std::size_t cap) {
  if (m == 0) throw DomainError("period must be positive");
  if (!a.is_square()) throw ShapeError("edge shift needs a square matrix, got " + a.shape_string());
  const Integer expected = trace_power(a, m);
  if (expected > Integer(static_cast<unsigned long>(cap)))
    throw DomainError("tr(A^" + std::to_string(m) + ") = " + expected.get_str() + " exceeds the point cap " +
                      std::to_string(cap));
  const EdgeList edges(a);
  std::vector<Word> points;
  points.reserve(expected.get_ui());
  Word word;
  word.reserve(m);
  // Depth-first over paths of length m, keeping those that close up.
  const auto extend = [&](auto&& self) -> void {
    const Edge& last = edges[word.back()];
    if (word.size() == m) {
      if (last.target == edges[word.front()].source) points.push_back(word);
      return;
    }
    for (std::size_t e = edges.out_begin(last.target); e < edges.out_end(last.target); ++e) {
      word.push_back(e);
      self(self);
      word.pop_back();
    }
  };
  for (std::size_t e = 0; e < edges.size(); ++e) {
    word.assign(1, e);
    extend(extend);
  }
  return points;
}

Word shift(const Word& w, std::size_t r) {
  Word out(w.size());
  if (w.empty()) return out;
  for (std::size_t t = 0; t < w.size(); ++t) out[t] = w[(t + r) % w.size()];
  return out;
}

std::size_t least_period(const Word& w) {
  for (std::size_t p = 1; p < w.size(); ++p)
    if (w.size() % p == 0 && shift(w, p) == w) return p;
  return w.size();
}

Word canonical_rotation(const Word& w) {
  Word best = w;
  for (std::size_t r = 1; r < w.size(); ++r) best = std::min(best, shift(w, r));
  return best;
}

OrbitBasis::OrbitBasis(std::size_t period, std::vector<Word> orbits) : period_(period), orbits_(std::move(orbits)) {
  std::sort(orbits_.begin(), orbits_.end());
  for (std::size_t i = 0; i < orbits_.size(); ++i) {
    if (orbits_[i].size() != period_ || least_period(orbits_[i]) != period_ ||
        canonical_rotation(orbits_[i]) != orbits_[i])
      throw std::invalid_argument("orbit basis entries must be canonical words of least period " +
                                  std::to_string(period_));
    index_.emplace(orbits_[i], i);
  }
}

std::optional<std::pair<std::size_t, std::size_t>> OrbitBasis::locate(const Word& point) const {
  if (point.size() != period_) return std::nullopt;
  const auto it = index_.find(canonical_rotation(point));
  if (it == index_.end()) return std::nullopt;
  for (std::size_t n = 0; n < period_; ++n)
    if (shift(it->first, n) == point) return std::make_pair(it->second, n);
  return std::nullopt;
}

OrbitBasis orbit_basis(const IntMatrix& a, std::size_t m, std::size_t cap) {
  std::set<Word> reps;
  for (const Word& w : enumerate_period_points(a, m, cap))
    if (least_period(w) == m) reps.insert(canonical_rotation(w));
  return {m, std::vector<Word>(reps.begin(), reps.end())};
}

}  // namespace sgcc
