#pragma once

#include <string>

#include <json.hpp>

#include "afd/numerics.hpp"

namespace afd::cli {

using Json = nlohmann::json;

/// Deterministic rendering: keys sorted, reals with 17 significant digits,
/// non-finite reals as null, arrays of scalars kept on one line.
std::string dump_json(const Json& value);

Json matrix_json(const RealMatrix& m);

/// Reals as numbers; non-finite values map to null.
Json real_json(double x);

}  // namespace afd::cli
