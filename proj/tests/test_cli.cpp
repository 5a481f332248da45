#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "sgcc/io.hpp"

namespace sgcc {
namespace {

namespace fs = std::filesystem;

const fs::path kGolden = SGCC_GOLDEN_DIR;
const std::string kData = (kGolden / "data").string() + "/";

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) s.replace(pos, from.size(), to);
  return s;
}

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(const std::vector<std::string>& args) {
  std::vector<std::string> argv{"sgcc"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = cli::run(argv, out, err);
  return {code, out.str(), err.str()};
}

struct GoldenCase {
  std::string name;
  int exit = 0;
  std::vector<std::string> args;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' '), e = s.find_last_not_of(' ');
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<GoldenCase> load_cases() {
  std::vector<GoldenCase> cases;
  std::ifstream f(kGolden / "cases.txt");
  for (std::string line; std::getline(f, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto a = line.find('|'), b = line.find('|', a + 1);
    GoldenCase c;
    c.name = trim(line.substr(0, a));
    c.exit = std::stoi(trim(line.substr(a + 1, b - a - 1)));
    std::istringstream words(line.substr(b + 1));
    for (std::string w; words >> w;) c.args.push_back(w);
    cases.push_back(c);
  }
  return cases;
}

class Golden : public ::testing::TestWithParam<GoldenCase> {};

// Set SGCC_UPDATE_GOLDEN=1 to rewrite the expected files.
TEST_P(Golden, MatchesExpectedOutput) {
  const GoldenCase& c = GetParam();
  const fs::path report = fs::temp_directory_path() / ("sgcc_golden_" + c.name + ".json");
  std::vector<std::string> args;
  for (const auto& a : c.args) args.push_back(a == "@OUT" ? report.string() : replace_all(a, "@D/", kData));
  const Outcome o = run(args);
  const std::string out = replace_all(o.out, kData, "@D/");
  const std::string err = replace_all(o.err, kData, "@D/");
  const fs::path base = kGolden / c.name;
  const bool has_report = std::find(c.args.begin(), c.args.end(), "@OUT") != c.args.end();
  if (std::getenv("SGCC_UPDATE_GOLDEN")) {
    std::ofstream(fs::path(base) += ".out", std::ios::binary) << out;
    std::ofstream(fs::path(base) += ".err", std::ios::binary) << err;
    if (has_report) std::ofstream(fs::path(base) += ".json", std::ios::binary) << slurp(report);
  }
  EXPECT_EQ(o.code, c.exit) << err;
  EXPECT_EQ(out, slurp(fs::path(base) += ".out"));
  EXPECT_EQ(err, slurp(fs::path(base) += ".err"));
  if (has_report) EXPECT_EQ(slurp(report), slurp(fs::path(base) += ".json"));
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(load_cases()),
                         [](const auto& info) { return info.param.name; });

TEST(Cli, EveryCommandHasAGoldenCase) {
  std::set<std::string> covered;
  for (const auto& c : load_cases())
    if (!c.args.empty()) covered.insert(c.args[0]);
  for (const char* cmd : {"verify-counterexample", "sgc2", "sgc2-path", "sgcc2", "triangles", "sgcc-orbits", "orbits",
                          "charpoly", "primitive", "se-verify", "units"})
    EXPECT_TRUE(covered.count(cmd)) << cmd;
}

TEST(Cli, JsonReportIsByteIdenticalAcrossRuns) {
  const fs::path a = fs::temp_directory_path() / "sgcc_det_a.json", b = fs::temp_directory_path() / "sgcc_det_b.json";
  ASSERT_EQ(run({"verify-counterexample", "--no-timings", "--seed", "9", "--json", a.string()}).code, 0);
  ASSERT_EQ(run({"verify-counterexample", "--no-timings", "--seed", "9", "--json", b.string()}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(nlohmann::json::parse(slurp(a))["seed"], 9);
}

TEST(Cli, HelpExitsZero) {
  const Outcome o = run({"--help"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("verify-counterexample"), std::string::npos);
}

TEST(Io, MatrixParsing) {
  const auto m = io::matrix_from_json(nlohmann::json::parse(R"({"rows":1,"cols":1,"entries":[[2]]})"));
  EXPECT_EQ(m, (RatMatrix{{2}}));
  const auto q = io::matrix_from_json(nlohmann::json::parse(R"({"rows":1,"cols":2,"entries":[["1/3", "-4/6"]]})"));
  EXPECT_EQ(q, (RatMatrix{{Rational(1, 3), Rational(-2, 3)}}));
  EXPECT_THROW(io::matrix_from_json(nlohmann::json::parse(R"({"rows":2,"cols":2,"entries":[[1,2],[3]]})")), InputError);
  EXPECT_THROW(io::matrix_from_json(nlohmann::json::parse(R"({"rows":1,"cols":1,"entries":[[true]]})")), InputError);
  EXPECT_THROW(io::matrix_from_json(nlohmann::json::parse(R"({"rows":2,"cols":1,"entries":[[1]]})")), InputError);
  EXPECT_EQ(io::matrix_from_json(io::matrix_to_json(q)), q);
}

TEST(Io, JsonDiagnosticsHaveLineAndColumn) {
  try {
    io::parse_json("{\n  \"a\": [1,\n  2,,]\n}", "x.json");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("column"), std::string::npos) << e.what();
  }
}

TEST(Io, PathRoundTrip) {
  const auto path = io::path_from_json(io::read_json_file(kData + "swap_loop.json"));
  ASSERT_EQ(path.size(), 2u);
  EXPECT_TRUE(path.is_closed());
  EXPECT_EQ(io::path_to_json(io::path_from_json(io::path_to_json(path))), io::path_to_json(path));
  EXPECT_THROW(io::path_from_json(nlohmann::json::parse(R"({"edges":[{"R":{"rows":1,"cols":1,"entries":[[1]]},
      "S":{"rows":1,"cols":1,"entries":[[1]]},"eps":0}]})")), InputError);
}

TEST(Io, UnitsAndProbes) {
  const auto units = io::units_from_json(io::read_json_file(kData + "units.json"));
  ASSERT_EQ(units.size(), 4u);
  EXPECT_EQ(units[3].f.coefficient(6), Rational(4260971, 3));
  const auto probes = io::probes_from_json(io::read_json_file(kData + "probes.json"));
  ASSERT_EQ(probes.size(), 5u);
  EXPECT_EQ(probes[2], (std::pair<std::int64_t, std::int64_t>{41, 3}));
}

}  // namespace
}  // namespace sgcc
