#include "doctest.h"

#include <cmath>
#include <numbers>

#include "pvi/errors.hpp"
#include "pvi/exactnum.hpp"
#include "pvi/poly.hpp"
#include "pvi/triples.hpp"

using namespace pvi;

namespace {

IntPoly ints(std::initializer_list<long long> c) { return poly_from(c); }

double eval_double(const IntPoly& p, double z) {
    double acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + it->convert_to<double>();
    return acc;
}

} // namespace

TEST_CASE("minimal polynomials of small fields") {
    CHECK(field_new(2)->minimal_polynomial() == ints({0, 1}));
    CHECK(field_new(3)->minimal_polynomial() == ints({-1, 1}));
    CHECK(field_new(5)->minimal_polynomial() == ints({-1, -1, 1}));
    CHECK(std::abs(eval_double(field_new(5)->minimal_polynomial(), 2.0 * std::cos(std::numbers::pi / 5))) < 1e-12);
}

TEST_CASE("minimal polynomial has the generator as root and divides the Chebyshev relation") {
    for (int n = 1; n <= 40; ++n) {
        const IntPoly m = cos_minimal_polynomial(n);
        CHECK(std::abs(eval_double(m, 2.0 * std::cos(std::numbers::pi / n))) < 1e-7);
        IntPoly rel = chebyshev_c(n);
        rel[0] += 2;
        const RatPoly q = rat_div(to_rat(rel), to_rat(m));
        CHECK(rat_trim(q).size() + m.size() - 1 == rat_trim(to_rat(rel)).size());
    }
}

TEST_CASE("elements from cosines") {
    CHECK(elem_from_cos(1, 2, field_new(2)).is_zero());
    CHECK(elem_from_cos(1, 3, field_new(3)) == FieldElement(-1));
    const auto ctx = field_new(5);
    const FieldElement e = elem_from_cos(2, 5, ctx);
    CHECK(std::abs(e.to_double() + 2.0 * std::cos(2.0 * std::numbers::pi / 5)) < 1e-12);
}

TEST_CASE("real embedding") {
    CHECK(std::abs(embed_real(elem_from_cos(1, 3, field_new(3)), 30).convert_to<double>() + 1.0) < 1e-12);
    CHECK(std::abs(embed_real(elem_from_cos(1, 5, field_new(5)), 30).convert_to<double>() + 1.618033988750) < 1e-12);
    CHECK(embed_real(FieldElement(0), 30).convert_to<double>() == 0.0);
}

TEST_CASE("field arithmetic") {
    const auto ctx = field_new(5);
    const FieldElement z = FieldElement::zeta(ctx);
    CHECK(z * z == z + FieldElement(1));
    const FieldElement a = z * Rational(3, 7) - FieldElement(2);
    CHECK((a + (-a)).is_zero());
    CHECK(FieldElement(1) * a == a);
    CHECK(a * a.inverse() == FieldElement(1));
    CHECK_THROWS_AS(FieldElement(0).inverse(), DivisionByZero);
}

TEST_CASE("elements of different fields meet in the compound field") {
    const FieldElement s2 = elem_from_cos(1, 4, field_new(4));
    const FieldElement g = elem_from_cos(1, 5, field_new(5));
    CHECK_THROWS_AS(s2 + g, ContextMismatch);
    const ContextPtr both = compound_context(s2.context(), g.context());
    const FieldElement sum = s2.lift(both) + g.lift(both);
    CHECK(sum.n() == 20);
    CHECK(std::abs(sum.to_double() - (-std::sqrt(2.0) - (1 + std::sqrt(5.0)) / 2)) < 1e-12);
    CHECK(s2 * s2 == FieldElement(2));
}

TEST_CASE("real comparison is exact") {
    const FieldElement g = elem_from_cos(1, 5, field_new(5));
    CHECK(real_compare(g, FieldElement(-2)) > 0);
    CHECK(real_compare(g, g) == 0);
    CHECK(real_compare(FieldElement(Rational(1, 3)), FieldElement(Rational(1, 2))) < 0);
}

TEST_CASE("rational elements lift into any field") {
    const FieldElement r(field_new(5), {Rational(3, 7), Rational(0), Rational(0), Rational(0)});
    const FieldElement up = r.lift(field_new(4));
    CHECK(up.n() == 4);
    CHECK(up == FieldElement(Rational(3, 7)));
    const FieldElement s2 = elem_from_cos(1, 4, field_new(4));
    const ExactTriple t = common_field(ExactTriple(r, s2, FieldElement(1)));
    CHECK(t(0).n() == 4);
}
