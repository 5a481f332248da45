#include <sstream>
#include <vector>

#include "sgcc/gyrocycle.hpp"

namespace sgcc {
namespace {

// r(r-1)/2 mod 2 for r mod 4: 0,1,2,3 -> 0,0,1,1.
int tau(int r) { return (r >> 1) & 1; }

std::vector<int> entries_mod4(const ModMatrix& m) {
  std::vector<int> out;
  out.reserve(m.rows() * m.cols());
  for (const Residue& x : m.entries()) {
    if (x.modulus() != 0 && x.modulus() != CocycleConfig::L)
      throw DomainError("sgc2 needs entries mod 4, got modulus " + std::to_string(x.modulus()));
    out.push_back(static_cast<int>(Residue(x.value(), CocycleConfig::L).value()));
  }
  return out;
}

}  // namespace

int sgc2_edge(const ModMatrix& r_mat, const ModMatrix& s_mat) {
  const SseEdge<Residue> shape_check(r_mat, s_mat);
  const std::size_t n = r_mat.rows(), p = r_mat.cols();
  const auto r4 = entries_mod4(r_mat), s4 = entries_mod4(s_mat);
  const auto R = [&](std::size_t i, std::size_t k) { return r4[i * p + k]; };
  const auto S = [&](std::size_t k, std::size_t i) { return s4[k * n + i]; };

  long total = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l <= k; ++l) {
          if (k > l) total += R(i, k) * S(k, i) * R(j, l) * S(l, j);
          total += R(i, k) * S(k, j) * R(j, l) * S(l, i);
          total &= 1;
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < p; ++k) total += tau(R(i, k)) * S(k, i) * S(k, i);
  return static_cast<int>(total & 1);
}

int sgc2_edge(const IntMatrix& r, const IntMatrix& s) {
  return sgc2_edge(mod_reduce(r, CocycleConfig::L), mod_reduce(s, CocycleConfig::L));
}

int sgc2_edge(const RatMatrix& r, const RatMatrix& s) {
  return sgc2_edge(mod_reduce(r, CocycleConfig::L), mod_reduce(s, CocycleConfig::L));
}

}  // namespace sgcc
