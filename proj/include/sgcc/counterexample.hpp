#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgcc/matrix.hpp"
#include "sgcc/polynomial.hpp"
#include "sgcc/unitcert.hpp"

namespace sgcc {

/// The 7x7 irreducible-case data: A = SR and B = RS are primitive, shift
/// equivalent over Z+ (via Z), and separated by sgc_2.
struct CounterexampleData {
  IntMatrix S, R, A, B;
  Polynomial p;
  std::vector<UnitPolynomial> units;  // f1..f4
  std::vector<std::pair<std::int64_t, std::int64_t>> probes;  // (m_i, t_i)
  std::vector<std::vector<std::int64_t>> expected_m;
  std::vector<std::vector<int>> expected_q;
};

const CounterexampleData& builtin_data();

/// RA = BR, AS = SB, RS = B^lag, SR = A^lag. ShapeError on incompatible shapes.
bool verify_se_witness(const IntMatrix& r, const IntMatrix& s, const IntMatrix& a, const IntMatrix& b,
                       std::uint64_t lag);

struct StepResult {
  std::string name;
  bool pass = false;
  nlohmann::json witness;
  std::int64_t ms = 0;

  friend bool operator==(const StepResult&, const StepResult&) = default;
};

struct VerificationReport {
  std::vector<StepResult> steps;
  bool verdict = false;  // true iff every step passed
  std::vector<std::string> documented_assumptions;
  std::string tool_version;
  std::uint64_t seed = 0;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Step names in execution order.
const std::vector<std::string>& verification_step_names();

struct VerificationConfig {
  /// Step names (or 1-based numbers as strings) to skip. A skipped step is
  /// recorded as not passed, so the verdict is false.
  std::set<std::string> skip;
  std::uint64_t seed = 0;
  bool record_timings = true;
  /// Overrides for perturbation experiments; defaults to builtin_data().
  const CounterexampleData* data = nullptr;
};

VerificationReport verify_counterexample(const VerificationConfig& config = {});

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

/// Multi-line human summary.
std::string summarize(const VerificationReport& report);

}  // namespace sgcc
