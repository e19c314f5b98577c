#include "doctest.h"

#include "pvi/classify.hpp"
#include "pvi/errors.hpp"
#include "pvi/io.hpp"

using namespace pvi;

TEST_CASE("field element JSON") {
    const FieldElement e = elem_from_cos(2, 5, field_new(5)) * Rational(7, 3);
    const Json j = to_json(e);
    CHECK(j.at("n") == 5);
    CHECK(j.at("coeffs")[0][1] == "3");
    CHECK(field_element_from_json(j) == e);
    CHECK(field_element_from_json(Json("-3/4")) == FieldElement(Rational(-3, 4)));
}

TEST_CASE("triple JSON round trip") {
    const ExactTriple t = known_orbits()[4].orbit.classes[7];
    const ExactTriple back = triple_from_json(Json::parse(to_json(t).dump()));
    for (int i = 0; i < 3; ++i) CHECK(back(i).coeffs() == t(i).coeffs());
    const ExactTriple simple = parse_triple_argument(R"({"coords":[0,1,1]})");
    CHECK(ExactTripleEq{}(simple, ExactTriple(0, 1, 1)));
    const ExactTriple ang = parse_triple_argument(R"({"angles":["1/2","1/3","1/3"]})");
    CHECK(ExactTripleEq{}(ang, ExactTriple(0, -1, -1)));
}

TEST_CASE("schema checks") {
    CHECK_THROWS_AS(triple_from_json(Json::parse(R"({"schema":"pvi.orbit/1","coords":[0,1,1]})")), SchemaMismatch);
    CHECK_THROWS_AS(triple_from_json(Json::parse(R"({"coords":[0,1]})")), SchemaMismatch);
    CHECK_THROWS_AS(parse_triple_argument("{not json"), SchemaMismatch);
    CHECK_THROWS_AS(field_element_from_json(Json::parse(R"({"n":0,"coeffs":[]})")), SchemaMismatch);
}

TEST_CASE("orbit JSON") {
    const Orbit o = orbit_enumerate(ExactTriple(0, 1, 1), BraidGroup::FullB3);
    const Json j = to_json(o);
    CHECK(j.at("classes").size() == 4);
    const Orbit back = orbit_from_json(Json::parse(j.dump()));
    REQUIRE(back.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(ExactTripleEq{}(back.classes[i], o.classes[i]));
}

TEST_CASE("run header") {
    const Json h = run_header("report", {{"digits", 50}});
    CHECK(h.at("version") == library_version());
    CHECK(h.at("config").at("digits") == 50);
}
