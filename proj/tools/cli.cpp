#include "cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "sgcc/counterexample.hpp"
#include "sgcc/gyrocycle.hpp"
#include "sgcc/io.hpp"
#include "sgcc/linalg.hpp"
#include "sgcc/orbit_action.hpp"
#include "sgcc/periodic.hpp"
#include "sgcc/unitcert.hpp"
#include "sgcc/version.hpp"

namespace sgcc::cli {
namespace {

IntMatrix integer_matrix(const std::string& path) {
  const RatMatrix m = io::parse_matrix_file(path);
  if (!is_integral(m)) throw InputError(path + ": expected integer entries");
  return to_integer(m);
}

SsePath<Integer> integer_path(const SsePath<Rational>& path) {
  std::vector<PathStep<Integer>> steps;
  for (const auto& s : path.steps()) {
    if (!is_integral(s.edge.R()) || !is_integral(s.edge.S())) throw InputError("path needs integer matrices");
    steps.push_back({SseEdge<Integer>(to_integer(s.edge.R()), to_integer(s.edge.S())), s.orientation});
  }
  return SsePath<Integer>(std::move(steps));
}

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sign-gyration cocycles for shifts of finite type", "sgcc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  // Each subcommand registers an action returning an exit code.
  std::function<int()> action;

  // verify-counterexample
  std::string json_path;
  std::vector<std::string> skip;
  bool no_timings = false;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify-counterexample", "Check every numeric claim of the 7x7 counterexample");
  verify->add_option("--json", json_path, "Write the JSON report here");
  verify->add_option("--skip", skip, "Skip a step (name or 1-based number); repeatable");
  verify->add_flag("--no-timings", no_timings, "Record 0 ms for every step (byte-stable output)");
  verify->add_option("--seed", seed, "Seed recorded in the report");
  verify->callback([&] {
    action = [&] {
      VerificationConfig config;
      config.skip = {skip.begin(), skip.end()};
      config.seed = seed;
      config.record_timings = !no_timings;
      for (const auto& s : config.skip) {
        const auto& names = verification_step_names();
        const bool known = std::find(names.begin(), names.end(), s) != names.end() ||
                           (s.size() == 1 && s[0] >= '1' && s[0] <= '9');
        if (!known) throw InputError("unknown step \"" + s + "\"");
      }
      const auto report = verify_counterexample(config);
      out << summarize(report);
      if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) throw InputError("cannot write " + json_path);
        f << to_json(report).dump(2) << "\n";
      }
      return report.verdict ? kOk : kFailed;
    };
  });

  // sgc2 / sgcc2
  std::string r_path, s_path, a_path, b_path;
  double tol = 1e-9;
  auto* sgc2 = app.add_subcommand("sgc2", "sgc_2 of an edge (R, S)");
  sgc2->add_option("--R", r_path)->required();
  sgc2->add_option("--S", s_path)->required();
  sgc2->callback([&] {
    action = [&] {
      out << sgc2_edge(io::parse_matrix_file(r_path), io::parse_matrix_file(s_path)) << "\n";
      return kOk;
    };
  });

  auto* sgcc2 = app.add_subcommand("sgcc2", "Perron-sign variant sgcc_2 of an edge (R, S)");
  sgcc2->add_option("--R", r_path)->required();
  sgcc2->add_option("--S", s_path)->required();
  sgcc2->add_option("--tol", tol, "Power-iteration tolerance");
  sgcc2->callback([&] {
    action = [&] {
      const RatMatrix r = io::parse_matrix_file(r_path), s = io::parse_matrix_file(s_path);
      const SseEdge<Rational> e(r, s);
      const int sign = perron_sign(r, e.source(), e.target(), tol);
      out << sgcc2_edge(r, s, tol) << "\n";
      out << "perron_sign " << sign << "\n";
      return kOk;
    };
  });

  std::string path_file;
  auto* sgc2_path_cmd = app.add_subcommand("sgc2-path", "sgc_2 of a path of SSE edges");
  sgc2_path_cmd->add_option("path", path_file)->required();
  sgc2_path_cmd->callback([&] {
    action = [&] {
      out << sgc2_path(io::path_from_json(io::read_json_file(path_file))) << "\n";
      return kOk;
    };
  });

  // triangles
  std::size_t count = 1000, dim_max = 4;
  unsigned entry_max = 7;
  std::string ring = "zplus";
  std::uint64_t tri_seed = 1;
  auto* tri = app.add_subcommand("triangles", "Random seed-completed triangles; checks sgc_2 vanishes around each");
  tri->add_option("--random", count, "Number of triangles");
  tri->add_option("--seed", tri_seed);
  tri->add_option("--ring", ring)->check(CLI::IsMember({"z4", "zplus"}));
  tri->add_option("--dim-max", dim_max)->check(CLI::PositiveNumber);
  tri->add_option("--entry-max", entry_max);
  tri->callback([&] {
    action = [&] {
      const auto result =
          run_triangle_suite(count, tri_seed, ring == "z4" ? TriangleRing::Z4 : TriangleRing::ZPlus, dim_max, entry_max);
      out << "ring " << ring << ": " << result.passed << " passed, " << result.failed << " failed\n";
      if (result.first_failure) out << "first failure: " << *result.first_failure << "\n";
      return result.failed == 0 ? kOk : kFailed;
    };
  });

  // sgcc-orbits
  std::size_t period = 2;
  std::optional<std::uint64_t> orbit_seed;
  auto* orbits_cmd = app.add_subcommand("sgcc-orbits", "SGCC_m of a Z+ path by periodic-orbit tracing");
  orbits_cmd->add_option("--path", path_file)->required();
  orbits_cmd->add_option("--m", period)->check(CLI::PositiveNumber);
  orbits_cmd->add_option("--seed", orbit_seed, "Seeded edge bijections (default: canonical)");
  orbits_cmd->callback([&] {
    action = [&] {
      const auto path = integer_path(io::path_from_json(io::read_json_file(path_file)));
      const auto choice = orbit_seed ? BijectionChoice::seeded(*orbit_seed) : BijectionChoice::canonical();
      const auto v = sgcc_path_via_orbits(path, period, choice);
      out << "edge_sum " << v.edge_sum << "\ncomposite " << v.composite << "\n";
      if (period == 2) out << "sgc2_path " << sgc2_path(path) << "\n";
      return v.edge_sum == v.composite ? kOk : kFailed;
    };
  });

  std::string matrix_file;
  auto* basis_cmd = app.add_subcommand("orbits", "Canonical period-m orbit basis as edge-index words");
  basis_cmd->add_option("matrix", matrix_file)->required();
  basis_cmd->add_option("--m", period)->check(CLI::PositiveNumber);
  basis_cmd->callback([&] {
    action = [&] {
      out << io::words_to_json(orbit_basis(integer_matrix(matrix_file), period).orbits()).dump() << "\n";
      return kOk;
    };
  });

  // charpoly / primitive
  auto* cp = app.add_subcommand("charpoly", "Characteristic polynomial det(tI - A)");
  cp->add_option("matrix", matrix_file)->required();
  cp->callback([&] {
    action = [&] {
      const RatMatrix m = io::parse_matrix_file(matrix_file);
      const Polynomial p = char_poly(m);
      out << p.to_string() << "\n";
      out << "det " << det(m).get_str() << "\n";
      return kOk;
    };
  });

  auto* prim = app.add_subcommand("primitive", "Primitivity test with the minimal exponent");
  prim->add_option("matrix", matrix_file)->required();
  prim->callback([&] {
    action = [&] {
      const auto k = primitivity_exponent(integer_matrix(matrix_file));
      if (k) out << "primitive, exponent " << *k << "\n";
      else out << "not primitive\n";
      return k ? kOk : kFailed;
    };
  });

  // se-verify
  std::uint64_t lag = 1;
  auto* se = app.add_subcommand("se-verify", "Check RA = BR, AS = SB, RS = B^lag, SR = A^lag");
  se->add_option("--R", r_path)->required();
  se->add_option("--S", s_path)->required();
  se->add_option("--A", a_path)->required();
  se->add_option("--B", b_path)->required();
  se->add_option("--lag", lag)->check(CLI::PositiveNumber);
  se->callback([&] {
    action = [&] {
      const bool ok = verify_se_witness(integer_matrix(r_path), integer_matrix(s_path), integer_matrix(a_path),
                                        integer_matrix(b_path), lag);
      out << (ok ? "shift equivalence witness holds" : "shift equivalence witness fails") << " (lag " << lag << ")\n";
      return ok ? kOk : kFailed;
    };
  });

  // units
  std::string units_path, probes_path;
  auto* units = app.add_subcommand("units", "Verify unit polynomials, their edges, and the generation certificate");
  units->add_option("--A", a_path)->required();
  units->add_option("--f", units_path)->required();
  units->add_option("--probes", probes_path)->required();
  units->callback([&] {
    action = [&] {
      const IntMatrix a = integer_matrix(a_path);
      const auto fs = io::units_from_json(io::read_json_file(units_path));
      const Polynomial p = char_poly(a);
      std::vector<ResidueProbe> probes;
      for (const auto& [m, t] : io::probes_from_json(io::read_json_file(probes_path))) probes.emplace_back(p, m, t);
      bool ok = true;
      std::vector<Polynomial> gens;
      for (const auto& f : fs) {
        const bool unit = check_unit(f, a);
        out << f.label << ": unit " << (unit ? "yes" : "no");
        if (unit) out << ", sgc2 of edge " << sgc2_edge(unit_edge(f, a));
        out << "\n";
        ok = ok && unit;
        gens.push_back(f.f);
      }
      gens.push_back(Polynomial::constant(-1));
      const auto cert = generation_certificate(gens, probes);
      out << "M (rows = probes, columns = generators with -1 last):\n";
      for (const auto& row : cert.m) out << "  " << join(row) << "\n";
      out << "Q:\n";
      for (const auto& row : cert.q) out << "  " << join(std::vector<std::int64_t>(row.begin(), row.end())) << "\n";
      out << "Q invertible mod 2: " << (cert.invertible ? "yes" : "no") << "\n";
      return ok && cert.invertible ? kOk : kFailed;
    };
  });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace sgcc::cli
