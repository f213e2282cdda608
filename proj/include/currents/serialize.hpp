#pragma once

// JSON encodings shared by every report: rationals as "p/q" strings,
// Gaussian rationals as ["re", "im"], algebras as
// { "name", "rep_size", "basis": [matrix...], "labels"? }.

#include <string>
#include <string_view>

#include <json.hpp>

#include "currents/exact.hpp"
#include "currents/lie_algebra.hpp"

namespace currents {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Gaussian& g);

/// Accepts "p/q" strings and JSON integers. `context` prefixes error messages.
Rational rational_from_json(const Json& j, const std::string& context);
/// Accepts ["re", "im"] or a bare rational (imaginary part 0).
Gaussian gaussian_from_json(const Json& j, const std::string& context);

Json algebra_to_json(const MatrixLieAlgebra& alg);
MatrixLieAlgebra algebra_from_json(const Json& j);

/// Parses algebra JSON text. Syntax errors report line and column.
MatrixLieAlgebra parse_algebra(std::string_view text);

/// "su2", "sl3", or a path to an algebra JSON file.
MatrixLieAlgebra load_algebra(const std::string& name_or_path);

}  // namespace currents
