#include "pvi/io.hpp"

#include <fstream>
#include <sstream>

#include "pvi/errors.hpp"

#ifndef PVI_VERSION
#define PVI_VERSION "0.0.0"
#endif

namespace pvi {

const char* library_version() { return PVI_VERSION; }

void check_schema(const Json& j, const char* expected) {
    if (!j.is_object()) throw SchemaMismatch("expected an object with schema " + std::string(expected));
    if (j.contains("schema") && j.at("schema") != expected)
        throw SchemaMismatch("expected " + std::string(expected) + ", found " + j.at("schema").dump());
}

Rational rational_from_json(const Json& j) {
    try {
        if (j.is_number_integer()) return Rational(j.get<long long>());
        if (j.is_string()) return Rational(j.get<std::string>());
        if (j.is_array() && j.size() == 2)
            return Rational(BigInt(j[0].get<std::string>()), BigInt(j[1].get<std::string>()));
    } catch (const std::exception& e) {
        throw SchemaMismatch(std::string("bad rational: ") + e.what());
    }
    throw SchemaMismatch("bad rational " + j.dump());
}

Json to_json(const FieldElement& e) {
    Json coeffs = Json::array();
    for (const Rational& c : e.coeffs())
        coeffs.push_back({boost::multiprecision::numerator(c).str(), boost::multiprecision::denominator(c).str()});
    return {{"n", e.n()}, {"coeffs", coeffs}};
}

FieldElement field_element_from_json(const Json& j) {
    if (j.is_number_integer() || j.is_string()) return FieldElement(rational_from_json(j));
    if (!j.is_object() || !j.contains("n") || !j.contains("coeffs")) throw SchemaMismatch("bad field element " + j.dump());
    const int n = j.at("n").get<int>();
    if (n < 1) throw SchemaMismatch("field index must be positive");
    std::vector<Rational> c;
    for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
    if (n == 1) {
        if (c.size() > 1) throw SchemaMismatch("rational element with several coefficients");
        return FieldElement(c.empty() ? Rational(0) : c[0]);
    }
    return FieldElement(field_new(n), std::move(c));
}

Json to_json(const ExactTriple& t) {
    Json coords = Json::array(), flt = Json::array();
    for (int i = 0; i < 3; ++i) {
        coords.push_back(to_json(t(i)));
        flt.push_back(t(i).to_double());
    }
    return {{"schema", kTripleSchema}, {"coords", coords}, {"float", flt}};
}

ExactTriple triple_from_json(const Json& j) {
    check_schema(j, kTripleSchema);
    if (j.contains("angles")) {
        const auto& a = j.at("angles");
        if (!a.is_array() || a.size() != 3) throw SchemaMismatch("angles must have three entries");
        return triple_from_angles(rational_from_json(a[0]), rational_from_json(a[1]), rational_from_json(a[2]));
    }
    if (!j.contains("coords")) throw SchemaMismatch("triple needs coords or angles");
    const auto& c = j.at("coords");
    if (!c.is_array() || c.size() != 3) throw SchemaMismatch("coords must have three entries");
    return common_field(ExactTriple(field_element_from_json(c[0]), field_element_from_json(c[1]),
                                    field_element_from_json(c[2])));
}

ExactTriple parse_triple_argument(const std::string& text) {
    Json j;
    try {
        const auto first = text.find_first_not_of(" \t\n");
        if (first != std::string::npos && text[first] == '{') {
            j = Json::parse(text);
        } else {
            std::ifstream in(text);
            if (!in) throw InvalidArgument("cannot open " + text);
            j = Json::parse(in);
        }
    } catch (const Json::parse_error& e) {
        throw SchemaMismatch(std::string("invalid JSON: ") + e.what());
    }
    return triple_from_json(j);
}

Json to_json(const Orbit& o) {
    Json classes = Json::array();
    for (const auto& t : o.classes) {
        Json e = to_json(t);
        e.erase("schema");
        classes.push_back(e);
    }
    return {{"schema", kOrbitSchema}, {"size", o.size()}, {"classes", classes}};
}

Orbit orbit_from_json(const Json& j) {
    check_schema(j, kOrbitSchema);
    if (!j.contains("classes")) throw SchemaMismatch("orbit needs classes");
    Orbit o;
    for (const auto& e : j.at("classes")) o.classes.push_back(triple_from_json(e));
    if (j.contains("size") && j.at("size").get<std::size_t>() != o.size()) throw SchemaMismatch("orbit size mismatch");
    return o;
}

Json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const AsymptoticDatum& d) {
    return {{"point", point_name(d.point)}, {"sigma", d.sigma}, {"l", d.l}, {"a", complex_json(d.a)}};
}

Json to_json(const Matrix2c& m) {
    Json rows = Json::array();
    for (int i = 0; i < 2; ++i) rows.push_back({complex_json(m(i, 0)), complex_json(m(i, 1))});
    return rows;
}

Json run_header(const std::string& command, const Json& config) {
    return {{"schema", kReportSchema}, {"tool", "pvi"}, {"version", library_version()}, {"command", command},
            {"config", config}};
}

} // namespace pvi
