#pragma once

// JSON forms of scalars and matrices. Every number is a full-precision decimal
// string, so parse(serialise(x)) == x.
//
//   scalar: {"digits": 60, "re": "...", "im": "..."}
//   matrix: {"dim": [r, c], "digits": 60, "entries": [["re", "im"], ...]}  (row-major)
//
// A "bits" key is added when the precision is not the one implied by "digits".

#include "svmaj/matrix.hpp"

#include <json.hpp>

#include <vector>

namespace svmaj {

using Json = nlohmann::ordered_json;

Json to_json(const Real& x);
Json to_json(const Complex& z);
Json to_json(const Matrix& m);
/// Plain array of decimal strings.
Json to_json_strings(const std::vector<Real>& values);

/// Throws ParseError on malformed input.
Complex complex_from_json(const Json& j);
Real real_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
std::vector<Real> reals_from_json_strings(const Json& j, Bits bits);

}  // namespace svmaj
