#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "sgcc/edge_shift.hpp"

namespace sgcc {

inline constexpr std::size_t kDefaultPointCap = 1'000'000;

/// All points whose period divides m, i.e. every closed edge path of length
/// m. There are exactly tr(A^m) of them. Throws DomainError for m = 0, and
/// when tr(A^m) exceeds `cap`.
std::vector<Word> enumerate_period_points(const IntMatrix& a, std::size_t m, std::size_t cap = kDefaultPointCap);

/// sigma^r on a periodic point: (sigma x)_t = x_{t+1}.
Word shift(const Word& w, std::size_t r);
std::size_t least_period(const Word& w);
/// Lexicographically least rotation.
Word canonical_rotation(const Word& w);

/// One point per orbit of cardinality m: the least rotation of each orbit,
/// sorted.
class OrbitBasis {
 public:
  OrbitBasis(std::size_t period, std::vector<Word> orbits);

  std::size_t period() const { return period_; }
  std::size_t size() const { return orbits_.size(); }
  const std::vector<Word>& orbits() const { return orbits_; }

  /// Position of the orbit containing `point` together with the rotation n
  /// such that point = sigma^n(representative).
  std::optional<std::pair<std::size_t, std::size_t>> locate(const Word& point) const;

 private:
  std::size_t period_;
  std::vector<Word> orbits_;
  std::map<Word, std::size_t> index_;
};

OrbitBasis orbit_basis(const IntMatrix& a, std::size_t m, std::size_t cap = kDefaultPointCap);

}  // namespace sgcc
