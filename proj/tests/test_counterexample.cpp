#include <gtest/gtest.h>

#include "sgcc/counterexample.hpp"
#include "sgcc/gyrocycle.hpp"
#include "sgcc/version.hpp"

namespace sgcc {
namespace {

VerificationReport quiet_run(VerificationConfig config = {}) {
  config.record_timings = false;
  return verify_counterexample(config);
}

const StepResult& step(const VerificationReport& r, const std::string& name) {
  for (const auto& s : r.steps)
    if (s.name == name) return s;
  throw std::out_of_range(name);
}

TEST(BuiltinData, Constants) {
  const auto& d = builtin_data();
  EXPECT_EQ(d.S(0, 0), 2);
  EXPECT_EQ(d.R(0, 0), -1);
  EXPECT_EQ(d.p, (Polynomial{1, -17, -33, -28, -23, 0, 0, 1}));
  ASSERT_EQ(d.units.size(), 4u);
  EXPECT_EQ(d.units[3].f.coefficient(6), Rational(4260971, 3));
  EXPECT_EQ(d.units[3].f.degree(), 6);
  EXPECT_EQ(d.probes.size(), 5u);
}

TEST(SeWitness, Examples) {
  const auto& d = builtin_data();
  EXPECT_TRUE(verify_se_witness(d.R, d.S, d.A, d.B, 1));
  EXPECT_TRUE(verify_se_witness(IntMatrix::identity(7), d.A, d.A, d.A, 1));
  EXPECT_FALSE(verify_se_witness(d.R, d.S, d.A, d.B, 2));
  EXPECT_FALSE(verify_se_witness(d.S, d.R, d.A, d.B, 1));
  EXPECT_THROW(verify_se_witness(IntMatrix(2, 3), IntMatrix(3, 2), d.A, d.B, 1), ShapeError);
}

TEST(Verify, DefaultRunPassesEveryStep) {
  const auto r = quiet_run();
  ASSERT_EQ(r.steps.size(), 9u);
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    EXPECT_EQ(r.steps[i].name, verification_step_names()[i]);
    EXPECT_TRUE(r.steps[i].pass) << r.steps[i].name;
    EXPECT_EQ(r.steps[i].ms, 0);
  }
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(r.tool_version, kVersion);
  EXPECT_FALSE(r.documented_assumptions.empty());
}

TEST(Verify, WitnessesCarryExpectedValues) {
  const auto r = quiet_run();
  EXPECT_EQ(step(r, "traces").witness["tr_A"], "0");
  EXPECT_EQ(step(r, "determinant").witness["det_A"], "-1");
  EXPECT_EQ(step(r, "char_poly").witness["char_poly_A"]["text"], "t^7 - 23*t^4 - 28*t^3 - 33*t^2 - 17*t + 1");
  EXPECT_EQ(step(r, "char_poly").witness["mod_2_factor"], "t^2 + t + 1");
  EXPECT_EQ(step(r, "char_poly").witness["irreducible_mod_prime"], 5);
  // Step 6 computes the value along two routes.
  EXPECT_EQ(step(r, "sgc2_connecting").witness["sgc2_integer_route"], 1);
  EXPECT_EQ(step(r, "sgc2_connecting").witness["sgc2_mod4_route"], 1);
  EXPECT_EQ(step(r, "minus_identity").witness["sgc2_minus_identity"], 0);
  EXPECT_EQ(step(r, "generation_certificate").witness["Q_matches"], true);
  EXPECT_EQ(step(r, "generation_certificate").witness["M_matches"], true);
}

TEST(Verify, PerturbedSFailsProducts) {
  CounterexampleData d = builtin_data();
  d.S(2, 3) += 1;
  VerificationConfig config;
  config.data = &d;
  const auto r = quiet_run(config);
  EXPECT_FALSE(step(r, "products").pass);
  EXPECT_FALSE(r.verdict);
}

TEST(Verify, RPlusFourE11LeavesSgc2Unchanged) {
  const auto& base = builtin_data();
  CounterexampleData d = base;
  d.R(0, 0) += 4;
  EXPECT_EQ(sgc2_edge(d.R, d.S), sgc2_edge(base.R, base.S));
  VerificationConfig config;
  config.data = &d;
  config.skip = {"products"};
  const auto r = quiet_run(config);
  EXPECT_TRUE(step(r, "sgc2_connecting").pass);
}

TEST(Verify, SkippedStepsFailTheVerdict) {
  VerificationConfig config;
  config.skip = {"unit_edges", "9"};
  const auto r = quiet_run(config);
  EXPECT_FALSE(step(r, "unit_edges").pass);
  EXPECT_EQ(step(r, "unit_edges").witness["skipped"], true);
  EXPECT_FALSE(step(r, "generation_certificate").pass);
  EXPECT_TRUE(step(r, "products").pass);
  EXPECT_FALSE(r.verdict);
}

TEST(Verify, DeterministicAndRoundTrips) {
  const auto a = quiet_run();
  const auto b = quiet_run();
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  const auto back = report_from_json(nlohmann::json::parse(to_json(a).dump()));
  EXPECT_EQ(back, a);
  const auto timed = verify_counterexample();
  EXPECT_EQ(report_from_json(to_json(timed)), timed);
}

TEST(Verify, SummaryListsEveryStep) {
  const std::string text = summarize(quiet_run());
  for (const auto& name : verification_step_names()) EXPECT_NE(text.find(name), std::string::npos);
  EXPECT_NE(text.find("[PASS]"), std::string::npos);
  EXPECT_EQ(text.find("[FAIL]"), std::string::npos);
}

}  // namespace
}  // namespace sgcc
