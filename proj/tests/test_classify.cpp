#include "doctest.h"

#include <algorithm>

#include "pvi/classify.hpp"
#include "pvi/errors.hpp"

using namespace pvi;

namespace {

CosQuadruple quad(Rational a, Rational b, Rational c, Rational d) { return CosQuadruple::normalized({a, b, c, d}); }

AngleTriple angles(Rational a, Rational b, Rational c) { return {a, b, c}; }

} // namespace

TEST_CASE("vanishing cosine sums are verified exactly") {
    CHECK(verify_cos_sum(quad({1, 4}, {1, 8}, {3, 8}, {1, 4})));
    CHECK(verify_cos_sum(quad({1, 30}, {11, 30}, {2, 5}, {1, 6})));
    CHECK_FALSE(verify_cos_sum(quad({1, 30}, {11, 30}, {2, 5}, {1, 7})));
}

TEST_CASE("family matching") {
    CHECK(match_quadruple_family(quad({1, 30}, {11, 30}, {2, 5}, {1, 6})).family == Family::A);
    CHECK(match_quadruple_family(quad({7, 30}, {17, 30}, {1, 5}, {1, 6})).family == Family::B);
    CHECK(match_quadruple_family(quad({1, 7}, {2, 7}, {3, 7}, {1, 6})).family == Family::C);
    CHECK(match_quadruple_family(quad({1, 3}, {1, 5}, {2, 5}, 0)).family == Family::E3);
    CHECK(match_quadruple_family(quad({1, 7}, {5, 14}, {1, 11}, {9, 22})).family == Family::F);
    CHECK(match_quadruple_family(quad({1, 4}, {1, 8}, {3, 8}, {1, 4})).family != Family::None);
}

TEST_CASE("search up to 42 finds the three sporadic solutions") {
    const TrigSearchResult r = trig_quadruple_search(42);
    for (const auto& [fam, q] : sporadic_quadruples()) {
        CHECK(std::find(r.solutions.begin(), r.solutions.end(), q) != r.solutions.end());
        CHECK(match_quadruple_family(q).family == fam);
    }
    for (const auto& q : r.solutions) {
        const FamilyMatch m = match_quadruple_family(q);
        if (m.family == Family::None) CHECK(m.flip_of.has_value());
    }
}

TEST_CASE("search at 30 already contains solution (a)") {
    const TrigSearchResult r = trig_quadruple_search(30);
    const CosQuadruple a = quad({1, 30}, {11, 30}, {2, 5}, {1, 6});
    CHECK(std::find(r.solutions.begin(), r.solutions.end(), a) != r.solutions.end());
}

TEST_CASE("angle steps") {
    const AngleTriple r = braid_angle_step(angles({1, 2}, {1, 3}, {1, 3}), 0, 1, 2);
    CHECK(r[2] == Rational(1, 3));
    CHECK(r[0] == Rational(1, 2));
    const AngleTriple s = braid_angle_step(angles({1, 2}, {1, 5}, {2, 7}), 0, 1, 2);
    CHECK(s[2] == Rational(2, 7));
    const AngleTriple b = braid_angle_step(angles({1, 3}, {1, 3}, {1, 3}), 0, 1, 2);
    CHECK(b[2] == Rational(0));
}

TEST_CASE("classification of seeds") {
    CHECK(classify_triple(ExactTriple(0, 1, 1)).type == OrbitType::Tetrahedron);
    const FieldElement s2 = -elem_from_cos(1, 4, field_new(4));
    CHECK(classify_triple(ExactTriple(FieldElement(-1), FieldElement(0), -s2)).type == OrbitType::Cube);
    const ExactTriple half(FieldElement(Rational(1, 2)), FieldElement(Rational(1, 2)), FieldElement(Rational(1, 2)));
    CHECK(classify_triple(half).type == OrbitType::Infinite);
    CHECK(classify_triple(ExactTriple(2, 0, 0)).type == OrbitType::Resonant);
}

TEST_CASE("known orbits") {
    const auto& k = known_orbits();
    REQUIRE(k.size() == 5);
    const std::size_t sizes[] = {4, 9, 10, 10, 18};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(k[i].orbit.size() == sizes[i]);
        CHECK(classify_triple(k[i].orbit.classes.back()).known_index == i);
    }
}
