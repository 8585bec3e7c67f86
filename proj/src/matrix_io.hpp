#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "matrix.hpp"

namespace roe {

// JSON matrix schema:
//   {"field": "real"|"complex", "dim": n, "data": [[row...], ...]}
// Complex entries are [re, im] pairs; real entries are plain numbers (a
// complex file may also use plain numbers for purely real entries).
nlohmann::json matrix_to_json(const Matrix& m);
SymMatrix matrix_from_json(const nlohmann::json& j);

// Plain text: n on the first line, then n rows of n real numbers.
std::string matrix_to_text(const Matrix& m);
SymMatrix matrix_from_text(std::string_view text);

// Accepts either format; JSON is recognized by a leading '{'.
SymMatrix parse_matrix(std::string_view text);

SymMatrix load_matrix(const std::filesystem::path& path);
// Writes JSON, or the text format when the extension is .txt.
void save_matrix(const Matrix& m, const std::filesystem::path& path);

}  // namespace roe
