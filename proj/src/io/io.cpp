#include "sgcc/io.hpp"

#include <fstream>
#include <sstream>

namespace sgcc::io {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < end; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(origin + ": malformed JSON at line " + std::to_string(line) + ", column " +
                     std::to_string(column));
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

namespace {

Rational entry_from_json(const json& e) {
  if (e.is_number_integer()) return e.is_number_unsigned() ? Rational(e.get<unsigned long>()) : Rational(e.get<long>());
  if (e.is_string()) return parse_rational(e.get<std::string>());
  throw InputError("matrix entry must be an integer or a \"p/q\" string, got " + e.dump());
}

json entry_to_json(const Rational& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return x.get_str();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

RatMatrix matrix_from_json(const json& j) {
  const json& rows_j = field(j, "rows");
  const json& cols_j = field(j, "cols");
  const json& entries = field(j, "entries");
  if (!rows_j.is_number_unsigned() || !cols_j.is_number_unsigned())
    throw InputError("\"rows\" and \"cols\" must be nonnegative integers");
  const auto rows = rows_j.get<std::size_t>(), cols = cols_j.get<std::size_t>();
  if (!entries.is_array() || entries.size() != rows)
    throw InputError("\"entries\" must be an array of " + std::to_string(rows) + " rows");
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != cols)
      throw InputError("ragged rows: row " + std::to_string(i) + " does not have " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = entry_from_json(row[k]);
  }
  return m;
}

json matrix_to_json(const RatMatrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& x : m.row(i)) row.push_back(entry_to_json(x));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json matrix_to_json(const IntMatrix& m) { return matrix_to_json(to_rational(m)); }

RatMatrix parse_matrix_file(const std::filesystem::path& path) { return matrix_from_json(read_json_file(path)); }

SsePath<Rational> path_from_json(const json& j) {
  const json& edges = field(j, "edges");
  if (!edges.is_array()) throw InputError("\"edges\" must be an array");
  std::vector<PathStep<Rational>> steps;
  for (const json& e : edges) {
    const json& eps = field(e, "eps");
    if (!eps.is_number_integer() || (eps.get<int>() != 1 && eps.get<int>() != -1))
      throw InputError("\"eps\" must be 1 or -1");
    steps.push_back({SseEdge<Rational>(matrix_from_json(field(e, "R")), matrix_from_json(field(e, "S"))), eps.get<int>()});
  }
  return SsePath<Rational>(std::move(steps));
}

json path_to_json(const SsePath<Rational>& path) {
  json edges = json::array();
  for (const auto& s : path.steps())
    edges.push_back({{"R", matrix_to_json(s.edge.R())}, {"S", matrix_to_json(s.edge.S())}, {"eps", s.orientation}});
  return {{"edges", edges}};
}

std::vector<std::pair<std::int64_t, std::int64_t>> probes_from_json(const json& j) {
  const json& probes = field(j, "probes");
  if (!probes.is_array()) throw InputError("\"probes\" must be an array");
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const json& p : probes) {
    const json &m = field(p, "m"), &t = field(p, "t");
    if (!m.is_number_integer() || !t.is_number_integer()) throw InputError("probe fields must be integers");
    out.emplace_back(m.get<std::int64_t>(), t.get<std::int64_t>());
  }
  return out;
}

std::vector<UnitPolynomial> units_from_json(const json& j) {
  const json& units = field(j, "units");
  if (!units.is_array()) throw InputError("\"units\" must be an array");
  std::vector<UnitPolynomial> out;
  for (std::size_t k = 0; k < units.size(); ++k) {
    const json& u = units[k];
    const Rational den = u.contains("den") ? entry_from_json(u.at("den")) : Rational(1);
    if (sgn(den) == 0) throw InputError("\"den\" must be nonzero");
    const json& coeffs = field(u, "coefficients");
    if (!coeffs.is_array()) throw InputError("\"coefficients\" must be an array");
    std::vector<Rational> c;
    for (const json& x : coeffs) c.push_back(entry_from_json(x) / den);
    out.push_back({Polynomial(std::move(c)), u.value("label", "u" + std::to_string(k + 1))});
  }
  return out;
}

json words_to_json(const std::vector<std::vector<std::size_t>>& words) {
  json out = json::array();
  for (const auto& w : words) out.push_back(w);
  return out;
}

}  // namespace sgcc::io
