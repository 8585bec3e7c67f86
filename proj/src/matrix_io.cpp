#include "matrix_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "error.hpp"

namespace roe {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (m.is_real()) {
        row.push_back(m(i, j).real());
      } else {
        row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
      }
    }
    rows.push_back(std::move(row));
  }
  return json{{"field", field_name(m.field())}, {"dim", m.dim()}, {"data", std::move(rows)}};
}

SymMatrix matrix_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("matrix JSON must be an object");
    Field field;
    try {
      field = field_from_name(j.at("field").get<std::string>());
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
    const auto dim = j.at("dim").get<std::size_t>();
    const json& data = j.at("data");
    if (dim == 0) throw ParseError("matrix dim must be at least 1");
    if (!data.is_array() || data.size() != dim) {
      throw ParseError("matrix data must have exactly dim rows");
    }
    std::vector<Complex> entries;
    entries.reserve(dim * dim);
    for (const json& row : data) {
      if (!row.is_array() || row.size() != dim) {
        throw ParseError("every matrix row must have exactly dim entries");
      }
      for (const json& v : row) {
        if (v.is_number()) {
          entries.emplace_back(v.get<double>(), 0.0);
        } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
          if (field == Field::Real) throw ParseError("real matrix contains a complex entry");
          entries.emplace_back(v[0].get<double>(), v[1].get<double>());
        } else {
          throw ParseError("matrix entries must be numbers or [re, im] pairs");
        }
      }
    }
    return SymMatrix(Matrix(dim, field, std::move(entries)));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed matrix JSON: ") + e.what());
  }
}

std::string matrix_to_text(const Matrix& m) {
  if (!m.is_real()) throw InvalidArgument("the text matrix format holds real matrices only");
  std::ostringstream os;
  os << std::setprecision(17) << m.dim() << '\n';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? " " : "") << m(i, j).real();
    os << '\n';
  }
  return os.str();
}

SymMatrix matrix_from_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  long long dim = 0;
  if (!(is >> dim) || dim < 1) throw ParseError("text matrix must start with a positive dimension");
  const auto n = static_cast<std::size_t>(dim);
  std::vector<double> rows(n * n);
  for (double& v : rows) {
    if (!(is >> v)) throw ParseError("text matrix has fewer than n*n numeric entries");
  }
  std::string trailing;
  if (is >> trailing) throw ParseError("text matrix has trailing content '" + trailing + "'");
  return SymMatrix::from_real(n, rows);
}

SymMatrix parse_matrix(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("malformed matrix JSON: ") + e.what());
    }
    return matrix_from_json(j);
  }
  return matrix_from_text(text);
}

SymMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matrix file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

void save_matrix(const Matrix& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write matrix file '" + path.string() + "'");
  if (path.extension() == ".txt") {
    out << matrix_to_text(m);
  } else {
    out << matrix_to_json(m).dump(2) << '\n';
  }
  if (!out) throw IoError("failed writing matrix file '" + path.string() + "'");
}

}  // namespace roe
