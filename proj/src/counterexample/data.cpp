#include "sgcc/counterexample.hpp"

namespace sgcc {
namespace {

Polynomial thirds(std::initializer_list<long> high_first) {
  std::vector<Rational> low_first;
  for (auto it = std::rbegin(high_first); it != std::rend(high_first); ++it) low_first.emplace_back(*it, 3);
  return Polynomial(std::move(low_first));
}

CounterexampleData make_data() {
  CounterexampleData d;
  d.S = IntMatrix{{2, 2, 2, 1, 3, 0, 0}, {1, 2, 2, 1, 3, 0, 0}, {1, 1, 2, 1, 3, 0, 0}, {1, 1, 1, 1, 3, 0, 0},
                  {0, 0, 0, 0, 0, 0, 1}, {4, 5, 6, 3, 10, 0, 0}, {4, 5, 6, 3, 0, 1, 0}};
  d.R = IntMatrix{{-1, 0, 1, 1, 0, 0, 0}, {1, -1, 0, 0, 0, 0, 0}, {0, 1, -1, 0, 0, 0, 0}, {0, 0, 1, -1, 0, 0, 0},
                  {0, 0, 0, 0, 1, 0, 0},  {0, 0, 0, 0, 0, 1, 0},  {0, 0, 0, 0, 0, 0, 1}};
  d.A = IntMatrix{{0, 0, 1, 1, 3, 0, 0}, {1, 0, 0, 0, 3, 0, 0}, {0, 1, 0, 0, 3, 0, 0}, {0, 0, 1, 0, 3, 0, 0},
                  {0, 0, 0, 0, 0, 0, 1}, {1, 1, 1, 1, 10, 0, 0}, {1, 1, 1, 1, 0, 1, 0}};
  d.B = IntMatrix{{0, 0, 1, 1, 3, 0, 0}, {1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0},
                  {0, 0, 0, 0, 0, 0, 1}, {4, 5, 6, 3, 10, 0, 0}, {4, 5, 6, 3, 0, 1, 0}};
  d.p = Polynomial({1, -17, -33, -28, -23, 0, 0, 1});
  d.units = {
      {Polynomial::variable(), "f1"},
      {thirds({38, 2, -1, -872, -1108, -1309, -713}), "f2"},
      {thirds({842, 5072, -6847, -46061, -34930, -52216, 2878}), "f3"},
      {thirds({4260971, -3124108, 2290532, -99681839, -46221667, -106722952, 5811547}), "f4"},
  };
  d.probes = {{17, 2}, {17, 4}, {41, 3}, {11, 1}, {11, 10}};
  d.expected_m = {{2, 5, 9, 10, -1}, {4, 9, 5, 8, -1}, {3, 26, 2, 36, -1}, {1, 10, 4, 8, -1}, {10, 7, 9, 6, -1}};
  d.expected_q = {{0, 1, 0, 1, 0}, {0, 0, 1, 0, 0}, {1, 1, 0, 0, 0}, {0, 1, 0, 1, 1}, {1, 1, 0, 1, 1}};
  return d;
}

}  // namespace

const CounterexampleData& builtin_data() {
  static const CounterexampleData data = make_data();
  return data;
}

}  // namespace sgcc
