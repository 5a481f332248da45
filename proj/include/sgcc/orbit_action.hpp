#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "sgcc/conjugacy.hpp"
#include "sgcc/periodic.hpp"

namespace sgcc {

/// How a conjugacy moves the period-m basis: phi(x_i) = sigma^{n(i)} y_{pi(i)}.
struct PermutationShiftData {
  std::size_t period = 0;
  std::vector<std::size_t> permutation;
  std::vector<std::size_t> shifts;  // n(i) in Z/m
};

/// Throws std::logic_error if an image is not a period-m point of the
/// target basis (the map would not be a conjugacy).
PermutationShiftData act_period_m(const PointMap& map, const OrbitBasis& source_basis, const OrbitBasis& target_basis);

/// 0 for an even permutation, 1 for odd.
int permutation_parity(const std::vector<std::size_t>& permutation);

/// Periods i < m with m/i a power of two; their orbit signs enter SGCC_m.
std::vector<std::size_t> orbit_sign_periods(std::size_t m);

/// GY_m + (m/2) * sum_i OS_i, in Z/m. `orbit_signs` maps each period from
/// orbit_sign_periods(m) to its orbit sign number. Throws std::invalid_argument
/// if one is missing.
std::size_t sgcc_m_from_data(const PermutationShiftData& data, const std::map<std::size_t, int>& orbit_signs);

/// SGCC_m of a conjugacy with respect to the canonical bases at both ends.
std::size_t sgcc_m(const PointMap& map, std::size_t m, std::size_t cap = kDefaultPointCap);

struct PathSgcc {
  std::size_t edge_sum = 0;   // sum_i eps(i) SGCC_m(R_i, S_i)
  std::size_t composite = 0;  // SGCC_m of the composite conjugacy
};

/// Both routes to SGCC_m of a Z+ path. They agree because the canonical
/// bases telescope. Throws DomainError on negative entries.
PathSgcc sgcc_path_via_orbits(const SsePath<Integer>& path, std::size_t m,
                              BijectionChoice choice = BijectionChoice::canonical(),
                              std::size_t cap = kDefaultPointCap);

}  // namespace sgcc
