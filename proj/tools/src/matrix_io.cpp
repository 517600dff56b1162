#include "afd/cli/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace afd::cli {

namespace {

RealMatrix square_from_rows(const std::vector<std::vector<double>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (n == 0) throw ParseError("matrix has no rows");
  RealMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != n) {
      std::ostringstream os;
      os << "row " << i << " has " << row.size() << " entries, expected " << n;
      throw ParseError(os.str());
    }
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = row[static_cast<std::size_t>(j)];
  }
  return m;
}

}  // namespace

MatrixFile parse_matrix_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("matrix file must be a JSON object");
  if (!doc.contains("rows") || !doc["rows"].is_array()) throw ParseError("missing \"rows\" array");

  std::vector<std::vector<double>> rows;
  for (const auto& row : doc["rows"]) {
    if (!row.is_array()) throw ParseError("each row must be an array");
    std::vector<double> values;
    for (const auto& x : row) {
      if (!x.is_number()) throw ParseError("matrix entries must be numbers");
      values.push_back(x.get<double>());
    }
    rows.push_back(std::move(values));
  }
  MatrixFile out;
  out.matrix = square_from_rows(rows);
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<long>() != out.matrix.rows()) {
      throw ParseError("\"n\" does not match the number of rows");
    }
  }
  if (doc.contains("tol")) {
    if (!doc["tol"].is_number() || !(doc["tol"].get<double>() > 0.0)) {
      throw ParseError("\"tol\" must be a positive number");
    }
    out.tol = doc["tol"].get<double>();
  }
  return out;
}

MatrixFile parse_matrix_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::vector<double> values;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(field, &used));
        if (field.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError("invalid CSV field \"" + field + "\"");
      }
    }
    rows.push_back(std::move(values));
  }
  MatrixFile out;
  out.matrix = square_from_rows(rows);
  return out;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  return csv ? parse_matrix_csv(buf.str()) : parse_matrix_json(buf.str());
}

}  // namespace afd::cli
