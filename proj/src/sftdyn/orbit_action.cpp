#include "sgcc/orbit_action.hpp"

#include <stdexcept>

namespace sgcc {

PermutationShiftData act_period_m(const PointMap& map, const OrbitBasis& source_basis, const OrbitBasis& target_basis) {
  if (source_basis.period() != target_basis.period() || source_basis.size() != target_basis.size())
    throw std::logic_error("source and target orbit bases differ in period or size");
  PermutationShiftData d;
  d.period = source_basis.period();
  std::vector<char> hit(target_basis.size());
  for (const Word& x : source_basis.orbits()) {
    const auto where = target_basis.locate(map.apply(x));
    if (!where) throw std::logic_error("image is not a period-" + std::to_string(d.period) + " point");
    if (hit[where->first]) throw std::logic_error("conjugacy is not injective on orbits");
    hit[where->first] = 1;
    d.permutation.push_back(where->first);
    d.shifts.push_back(where->second);
  }
  return d;
}

int permutation_parity(const std::vector<std::size_t>& permutation) {
  std::vector<char> seen(permutation.size());
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < permutation.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = permutation.at(j)) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return static_cast<int>(transpositions % 2);
}

std::vector<std::size_t> orbit_sign_periods(std::size_t m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < m; ++i) {
    if (m % i != 0) continue;
    const std::size_t ratio = m / i;
    if ((ratio & (ratio - 1)) == 0) out.push_back(i);
  }
  return out;
}

std::size_t sgcc_m_from_data(const PermutationShiftData& data, const std::map<std::size_t, int>& orbit_signs) {
  const std::size_t m = data.period;
  if (m == 0) throw std::invalid_argument("period must be positive");
  std::size_t gyration = 0;
  for (std::size_t n : data.shifts) gyration = (gyration + n) % m;
  std::size_t signs = 0;
  for (std::size_t i : orbit_sign_periods(m)) {
    const auto it = orbit_signs.find(i);
    if (it == orbit_signs.end())
      throw std::invalid_argument("missing orbit sign number at period " + std::to_string(i));
    signs += static_cast<std::size_t>(it->second);
  }
  return (gyration + (m / 2) * signs) % m;
}

std::size_t sgcc_m(const PointMap& map, std::size_t m, std::size_t cap) {
  const auto data = act_period_m(map, orbit_basis(map.source, m, cap), orbit_basis(map.target, m, cap));
  std::map<std::size_t, int> signs;
  for (std::size_t i : orbit_sign_periods(m)) {
    const auto d = act_period_m(map, orbit_basis(map.source, i, cap), orbit_basis(map.target, i, cap));
    signs[i] = permutation_parity(d.permutation);
  }
  return sgcc_m_from_data(data, signs);
}

PathSgcc sgcc_path_via_orbits(const SsePath<Integer>& path, std::size_t m, BijectionChoice choice, std::size_t cap) {
  if (m == 0) throw DomainError("period must be positive");
  PathSgcc out;
  if (path.empty()) return out;
  for (std::size_t k = 0; k < path.size(); ++k) {
    const auto& step = path.steps()[k];
    const BijectionChoice step_choice = choice.seed ? BijectionChoice::seeded(*choice.seed + k) : choice;
    const std::size_t v = sgcc_m(step_map({step.edge, 1}, step_choice), m, cap);
    out.edge_sum = (out.edge_sum + (step.orientation > 0 ? v : m - v)) % m;
  }
  out.composite = sgcc_m(path_map(path, choice), m, cap);
  return out;
}

}  // namespace sgcc
