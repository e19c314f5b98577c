#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "pvi/errors.hpp"
#include "pvi/solutions.hpp"

using namespace pvi;

namespace {

// Exponents with multiplicity (one per sheet), rounded for multiset comparison.
std::vector<long> sheet_exponents(const std::vector<BranchPoint>& bps) {
    std::vector<long> out;
    for (const auto& b : bps)
        for (int i = 0; i < b.ramification; ++i) out.push_back(std::lround(b.fitted_exponent * 1e6));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> predicted_exponents(const std::vector<PredictedBranch>& pbs) {
    std::vector<long> out;
    for (const auto& p : pbs) out.push_back(std::lround(p.l * 1e6));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("solution registry") {
    CHECK(all_solutions().size() == 5);
    CHECK(solution_from_name("h3p") == SolutionId::H3p);
    CHECK_FALSE(solution_from_name("nope"));
    CHECK(parametric_solution(SolutionId::B3).mu == Rational(-1, 3));
    CHECK_FALSE(parametric_solution(SolutionId::A3c).printed);
}

TEST_CASE("exact evaluation of the stored formulas") {
    const auto [x, y] = eval_parametric(parametric_solution(SolutionId::B3), Rational(1, 2));
    CHECK(x == Rational(27, 25));
    CHECK(y == Rational(108, 545));
    const auto [xa, ya] = eval_parametric(parametric_solution(SolutionId::A3), Rational(0));
    CHECK(xa == Rational(-1));
    CHECK(ya == Rational(1));
    CHECK_THROWS_AS(eval_parametric(parametric_solution(SolutionId::B3), Rational(-2)), SingularParameter);
}

TEST_CASE("samples on the singular locus are flagged") {
    const auto& a3 = parametric_solution(SolutionId::A3);
    CHECK_THROWS_AS(pvi_residual(a3, Complex50(0), Complex50(-0.25)), DegenerateSample);
    CHECK_THROWS_AS(pvi_rhs_generic(Complex50(0.3), Complex50(0.3), Complex50(1), Complex50(0.2)), SingularPoint);
}

TEST_CASE("residual verification") {
    const VerifyReport h = verify_solution(SolutionId::H3p, 30);
    CHECK(h.passed);
    CHECK(h.max_residual < 1e-30);
    const VerifyReport a = verify_solution(SolutionId::A3c, 30);
    CHECK(a.passed);
    const VerifyReport bad = verify_solution(SolutionId::A3c, 20, Rational(-1, 2));
    CHECK_FALSE(bad.passed);
    CHECK(bad.max_residual > 1e-3);
    const VerifyReport b3 = verify_solution(SolutionId::B3, 20);
    CHECK_FALSE(b3.passed);
    CHECK_FALSE(b3.failing.empty());
}

TEST_CASE("mu -> -mu transformation maps solutions to solutions") {
    using R = boost::multiprecision::cpp_bin_float_100;
    const auto& sol = parametric_solution(SolutionId::H3p);
    const Complex100 mu = Complex100(boost::multiprecision::numerator(sol.mu).str().c_str()) /
                          Complex100(boost::multiprecision::denominator(sol.mu).str().c_str());
    auto transformed = [&](const Complex100& s) {
        const auto X = eval_jet(sol.x, s), Y = eval_jet(sol.y, s);
        return mu_negate_transform(Y.f, Y.df / X.df, X.f, mu);
    };
    for (const auto& s0 : residual_samples(sol, 4)) {
        const Complex100 s(s0.real(), s0.imag());
        const R h("1e-25");
        const Complex100 f0 = transformed(s), fp = transformed(s + Complex100(h)), fm = transformed(s - Complex100(h));
        const Complex100 d1 = (fp - fm) / Complex100(2 * h), d2 = (fp - Complex100(2) * f0 + fm) / Complex100(h * h);
        const auto X = eval_jet(sol.x, s);
        const Complex100 yx = d1 / X.df, yxx = (d2 * X.df - d1 * X.ddf) / (X.df * X.df * X.df);
        const Complex100 good = pvi_rhs_generic(X.f, f0, yx, Complex100(-mu));
        const Complex100 same = pvi_rhs_generic(X.f, f0, yx, mu);
        CHECK(static_cast<double>(abs(yxx - good) / (abs(yxx) + abs(good))) < 1e-30);
        CHECK(static_cast<double>(abs(yxx - same) / (abs(yxx) + abs(same))) > 1e-6);
    }
}

TEST_CASE("branch exponents at 0 match the pure-braid orbit") {
    for (SolutionId id : {SolutionId::H3p, SolutionId::A3c}) {
        const auto& sol = parametric_solution(id);
        CHECK(sheet_exponents(branch_points(sol, CriticalPoint::Zero)) ==
              predicted_exponents(predicted_branches(sol, CriticalPoint::Zero)));
    }
}

TEST_CASE("great dodecahedron Puiseux data") {
    const PuiseuxBranch b17 = h3pp_branch(17);
    CHECK(b17.exponent == Rational(1));
    CHECK(std::abs(std::abs(b17.coefficient) - (3.0 + std::sqrt(5.0)) / 6.0) < 1e-12);
    const PuiseuxBranch b6 = h3pp_branch(6);
    CHECK(b6.exponent == Rational(2, 5));
    CHECK(std::abs(std::abs(b6.coefficient) - std::pow(6.0, 0.8) / 361.0) < 1e-12);
    const PuiseuxBranch b1 = h3pp_branch(1);
    CHECK(b1.exponent == Rational(4, 5));
    CHECK(std::abs(std::abs(b1.coefficient) - (49.0 / 169.0) * std::pow(6.0, -0.4)) < 1e-12);
    CHECK_THROWS_AS(h3pp_branch(19), OutOfRange);
}
