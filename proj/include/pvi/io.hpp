#pragma once

// JSON serialization of exact and numerical values with versioned schemas.

#include <string>

#include "json.hpp"
#include "pvi/connection.hpp"
#include "pvi/triples.hpp"

namespace pvi {

using Json = nlohmann::ordered_json;

inline constexpr const char* kTripleSchema = "pvi.triple/1";
inline constexpr const char* kOrbitSchema = "pvi.orbit/1";
inline constexpr const char* kReportSchema = "pvi.report/1";

const char* library_version();

// {"n": n, "coeffs": [["num", "den"], ...]}
Json to_json(const FieldElement& e);
FieldElement field_element_from_json(const Json& j);

// Exact rational from an integer, a "p/q" string or a {"num", "den"} pair.
Rational rational_from_json(const Json& j);

// {"schema", "coords": [element x3], "float": [..]}. Input coordinates may also be
// integers or "p/q" strings; {"angles": [r1, r2, r3]} builds (2cos pi r_i).
Json to_json(const ExactTriple& t);
ExactTriple triple_from_json(const Json& j);
// Accepts inline JSON or a path to a JSON file.
ExactTriple parse_triple_argument(const std::string& text);

Json to_json(const Orbit& o);
Orbit orbit_from_json(const Json& j);

Json to_json(const AsymptoticDatum& d);
Json to_json(const Matrix2c& m);
Json complex_json(Complex z);

// Header embedded in every CLI artifact.
Json run_header(const std::string& command, const Json& config);

void check_schema(const Json& j, const char* expected);

} // namespace pvi
