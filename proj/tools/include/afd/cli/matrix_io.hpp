#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "afd/numerics.hpp"

namespace afd::cli {

/// Unreadable or malformed input; maps to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MatrixFile {
  RealMatrix matrix;
  std::optional<double> tol;
};

/// JSON {"n": int, "rows": [[...]], "tol"?: real}.
MatrixFile parse_matrix_json(const std::string& text);

/// One matrix row per line, comma separated. Blank lines and lines starting
/// with '#' are skipped.
MatrixFile parse_matrix_csv(const std::string& text);

/// Dispatches on the extension: ".csv" reads CSV, anything else JSON.
MatrixFile read_matrix_file(const std::string& path);

}  // namespace afd::cli
