#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sgcc/counterexample.hpp"
#include "sgcc/gyrocycle.hpp"
#include "sgcc/linalg.hpp"
#include "sgcc/orbit_action.hpp"
#include "sgcc/periodic.hpp"
#include "sgcc/version.hpp"

namespace py = pybind11;
using namespace sgcc;

namespace {

// Entries may be int, fractions.Fraction or "p/q" strings.
Rational to_rational_scalar(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  if (py::isinstance<py::bool_>(h)) throw InputError("matrix entries must be numbers");
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
    const auto num = py::str(h.attr("numerator")).cast<std::string>();
    const auto den = py::str(h.attr("denominator")).cast<std::string>();
    return parse_rational(num + "/" + den);
  }
  throw InputError("matrix entries must be int, Fraction or \"p/q\" strings");
}

RatMatrix to_matrix(const py::sequence& rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const auto& x : row.cast<py::sequence>()) r.push_back(to_rational_scalar(x));
    out.push_back(std::move(r));
  }
  if (out.empty()) return {};
  for (const auto& r : out)
    if (r.size() != out[0].size()) throw ShapeError("ragged rows");
  return RatMatrix::from_rows(out);
}

IntMatrix to_int_matrix(const py::sequence& rows) {
  const RatMatrix m = to_matrix(rows);
  if (!is_integral(m)) throw InputError("expected integer entries");
  return to_integer(m);
}

py::object to_py(const Rational& x) {
  if (x.get_den() == 1) return py::int_(py::str(x.get_num().get_str()));
  return py::module_::import("fractions").attr("Fraction")(x.get_str());
}

py::object to_py_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

SsePath<Integer> to_path(const py::sequence& edges) {
  std::vector<PathStep<Integer>> steps;
  for (const auto& e : edges) {
    const auto t = e.cast<py::tuple>();
    if (t.size() != 3) throw InputError("path steps are (R, S, eps) tuples");
    steps.push_back({SseEdge<Integer>(to_int_matrix(t[0]), to_int_matrix(t[1])), t[2].cast<int>()});
  }
  return SsePath<Integer>(std::move(steps));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sign-gyration cocycles for shifts of finite type";
  m.attr("__version__") = kVersion;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.def("char_poly", [](const py::sequence& a) {
    const Polynomial p = char_poly(to_matrix(a));
    py::list out;
    for (const auto& c : p.coefficients()) out.append(to_py(c));
    return out;
  }, py::arg("a"), "Coefficients of det(tI - A), lowest degree first.");

  m.def("det", [](const py::sequence& a) { return to_py(det(to_matrix(a))); }, py::arg("a"));

  m.def("primitivity_exponent", [](const py::sequence& a) { return primitivity_exponent(to_int_matrix(a)); },
        py::arg("a"), "Smallest k with A^k > 0, or None.");

  m.def("trace_power", [](const py::sequence& a, std::uint64_t k) { return to_py(Rational(trace_power(to_matrix(a), k))); },
        py::arg("a"), py::arg("m"));

  m.def("sgc2", [](const py::sequence& r, const py::sequence& s) { return sgc2_edge(to_matrix(r), to_matrix(s)); },
        py::arg("r"), py::arg("s"));

  m.def("sgcc2", [](const py::sequence& r, const py::sequence& s, double tol) {
    return sgcc2_edge(to_matrix(r), to_matrix(s), tol);
  }, py::arg("r"), py::arg("s"), py::arg("tol") = 1e-9);

  m.def("perron_sign", [](const py::sequence& r, const py::sequence& s, double tol) {
    const RatMatrix rr = to_matrix(r), ss = to_matrix(s);
    return perron_sign(rr, rr * ss, ss * rr, tol);
  }, py::arg("r"), py::arg("s"), py::arg("tol") = 1e-9);

  m.def("triangle_suite", [](std::size_t count, std::uint64_t seed, const std::string& ring, std::size_t dim_max,
                             unsigned entry_max) {
    if (ring != "z4" && ring != "zplus") throw InputError("ring must be \"z4\" or \"zplus\"");
    const auto r = run_triangle_suite(count, seed, ring == "z4" ? TriangleRing::Z4 : TriangleRing::ZPlus, dim_max,
                                      entry_max);
    return py::make_tuple(r.passed, r.failed);
  }, py::arg("count"), py::arg("seed"), py::arg("ring") = "zplus", py::arg("dim_max") = 4, py::arg("entry_max") = 7,
     "(passed, failed) over random seed-completed triangles.");

  m.def("period_points", [](const py::sequence& a, std::size_t k) { return enumerate_period_points(to_int_matrix(a), k); },
        py::arg("a"), py::arg("m"));

  m.def("orbit_basis", [](const py::sequence& a, std::size_t k) { return orbit_basis(to_int_matrix(a), k).orbits(); },
        py::arg("a"), py::arg("m"));

  m.def("sgcc_path", [](const py::sequence& edges, std::size_t k, std::optional<std::uint64_t> seed) {
    const auto v = sgcc_path_via_orbits(to_path(edges), k,
                                        seed ? BijectionChoice::seeded(*seed) : BijectionChoice::canonical());
    return py::make_tuple(v.edge_sum, v.composite);
  }, py::arg("edges"), py::arg("m") = 2, py::arg("seed") = py::none(),
     "(edge_sum, composite) SGCC_m of a path of (R, S, eps) steps.");

  m.def("sgc2_path", [](const py::sequence& edges) { return sgc2_path(to_path(edges)); }, py::arg("edges"));

  m.def("se_verify", [](const py::sequence& r, const py::sequence& s, const py::sequence& a, const py::sequence& b,
                        std::uint64_t lag) {
    return verify_se_witness(to_int_matrix(r), to_int_matrix(s), to_int_matrix(a), to_int_matrix(b), lag);
  }, py::arg("r"), py::arg("s"), py::arg("a"), py::arg("b"), py::arg("lag") = 1);

  m.def("verify_counterexample", [](const std::vector<std::string>& skip, std::uint64_t seed, bool timings) {
    VerificationConfig config;
    config.skip = {skip.begin(), skip.end()};
    config.seed = seed;
    config.record_timings = timings;
    return to_py_json(to_json(verify_counterexample(config)));
  }, py::arg("skip") = std::vector<std::string>{}, py::arg("seed") = 0, py::arg("timings") = false,
     "Runs the built-in counterexample pipeline; returns the report as a dict.");
}
