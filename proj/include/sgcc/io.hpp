#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgcc/matrix.hpp"
#include "sgcc/polynomial.hpp"
#include "sgcc/sse.hpp"
#include "sgcc/unitcert.hpp"

namespace sgcc::io {

// Matrix:  {"rows": n, "cols": m, "entries": [[...], ...]}, entries are JSON
//          integers or strings "p" / "p/q".
// Path:    {"edges": [{"R": <matrix>, "S": <matrix>, "eps": 1 | -1}, ...]}
// Probes:  {"probes": [{"m": 17, "t": 2}, ...]}
// Units:   {"units": [{"label": "f2", "den": 3, "coefficients": [c0, c1, ...]}]}
//          coefficients lowest degree first; the polynomial is (1/den) * sum c_k t^k.

/// Parses JSON text; syntax errors become InputError with "line L, column C".
nlohmann::json parse_json(const std::string& text, const std::string& origin = "<input>");
nlohmann::json read_json_file(const std::filesystem::path& path);

RatMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const RatMatrix& m);
nlohmann::json matrix_to_json(const IntMatrix& m);

RatMatrix parse_matrix_file(const std::filesystem::path& path);

SsePath<Rational> path_from_json(const nlohmann::json& j);
nlohmann::json path_to_json(const SsePath<Rational>& path);

std::vector<std::pair<std::int64_t, std::int64_t>> probes_from_json(const nlohmann::json& j);
std::vector<UnitPolynomial> units_from_json(const nlohmann::json& j);

/// Edge-index words, for golden files.
nlohmann::json words_to_json(const std::vector<std::vector<std::size_t>>& words);

}  // namespace sgcc::io
