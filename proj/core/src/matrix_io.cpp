#include "opcalc/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "opcalc/errors.hpp"

namespace opcalc {
namespace {

using nlohmann::json;

cplx entry_from_json(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  fail(ErrorKind::ParseError, "matrix entry must be a number or an [re, im] pair");
}

}  // namespace

Matrix matrix_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("matrix")) doc = doc["matrix"];
  if (!doc.is_array() || doc.empty()) fail(ErrorKind::ParseError, "matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(doc.size());
  if (!doc[0].is_array() || doc[0].empty()) fail(ErrorKind::ParseError, "matrix rows must be non-empty arrays");
  const auto cols = static_cast<Eigen::Index>(doc[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = doc[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      fail(ErrorKind::ParseError, "matrix rows have unequal lengths");
    }
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = entry_from_json(row[static_cast<std::size_t>(j)]);
  }
  return m;
}

std::string matrix_to_json(const Matrix& m) {
  json doc = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    doc.push_back(std::move(row));
  }
  return doc.dump();
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::IoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return matrix_from_json(buf.str());
}

void write_matrix_file(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::IoError, "cannot write " + path.string());
  out << matrix_to_json(m) << '\n';
}

}  // namespace opcalc
