#pragma once

// The algebraic solutions in parametric form, residual verification against
// PVI(mu), the mu -> -mu transformation and the great dodecahedron Puiseux data.

#include <boost/multiprecision/cpp_complex.hpp>

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "pvi/connection.hpp"
#include "pvi/poly.hpp"

namespace pvi {

using Complex50 = boost::multiprecision::cpp_complex_50;
using Complex100 = boost::multiprecision::cpp_complex_100;

enum class SolutionId { A3, B3, H3, H3p, A3c };

std::string solution_name(SolutionId id);
std::optional<SolutionId> solution_from_name(const std::string& name);
std::vector<SolutionId> all_solutions();

struct RationalFunction {
    IntPoly num, den;
};

struct ParametricSolution {
    SolutionId id;
    std::string name;
    std::string description;
    Rational mu;
    RationalFunction x, y;
    ExactTriple triple; // (x0, x1, x_inf)
    bool printed = true;  // false for candidates not in the printed list
};

const ParametricSolution& parametric_solution(SolutionId id);

// Value and first two s-derivatives of a rational function.
template <class C>
struct Jet {
    C f, df, ddf;
};

template <class C>
Jet<C> eval_jet(const RationalFunction& r, const C& s) {
    const IntPoly n1 = poly_derivative(r.num), n2 = poly_derivative(n1);
    const IntPoly d1 = poly_derivative(r.den), d2 = poly_derivative(d1);
    const C n = poly_eval(r.num, s), np = poly_eval(n1, s), npp = poly_eval(n2, s);
    const C d = poly_eval(r.den, s), dp = poly_eval(d1, s), dpp = poly_eval(d2, s);
    if (d == C(0)) throw SingularParameter("pole of the parametric form");
    Jet<C> j;
    j.f = n / d;
    const C u = np * d - n * dp;
    j.df = u / (d * d);
    j.ddf = ((npp * d - n * dpp) * d - C(2) * dp * u) / (d * d * d);
    return j;
}

template <class C>
std::pair<C, C> eval_parametric(const ParametricSolution& sol, const C& s) {
    return {eval_jet(sol.x, s).f, eval_jet(sol.y, s).f};
}

// Right side of PVI(mu), y'' = F(x, y, y').
template <class C>
C pvi_rhs_generic(const C& x, const C& y, const C& yx, const C& mu) {
    const C one(1), half = C(1) / C(2);
    if (y == C(0) || y == one || y == x || x == C(0) || x == one) throw SingularPoint("fixed singular locus");
    const C two_mu_m1 = C(2) * mu - one;
    return half * (one / y + one / (y - one) + one / (y - x)) * yx * yx -
           (one / x + one / (x - one) + one / (y - x)) * yx +
           half * y * (y - one) * (y - x) / (x * x * (x - one) * (x - one)) *
               (two_mu_m1 * two_mu_m1 + x * (x - one) / ((y - x) * (y - x)));
}

// Relative residual |y_xx - F| / (|y_xx| + |F|) of the parametric pair at s.
template <class C>
auto pvi_residual(const ParametricSolution& sol, const C& s, const C& mu) {
    const Jet<C> X = eval_jet(sol.x, s), Y = eval_jet(sol.y, s);
    using std::abs;
    using R = typename boost::multiprecision::component_type<C>::type;
    const R tiny("1e-40");
    if (abs(X.df) < tiny) throw DegenerateSample("dx/ds vanishes");
    for (const C& v : {Y.f, Y.f - C(1), Y.f - X.f, X.f, X.f - C(1)})
        if (abs(v) < tiny) throw DegenerateSample("sample on the singular locus");
    const C yx = Y.df / X.df;
    const C yxx = (Y.ddf * X.df - Y.df * X.ddf) / (X.df * X.df * X.df);
    const C rhs = pvi_rhs_generic(X.f, Y.f, yx, mu);
    return R(abs(yxx - rhs) / (abs(yxx) + abs(rhs)));
}

struct ResidualSample {
    std::complex<double> s;
    double residual;
};

struct VerifyReport {
    SolutionId id;
    std::size_t samples = 0;
    double max_residual = 0.0;
    bool passed = false;
    std::vector<ResidualSample> failing; // samples above the threshold
};

constexpr double kResidualThreshold = 1e-30;

// Samples on |s| = 7/11 at least 1e-2 away from every singular parameter.
std::vector<std::complex<double>> residual_samples(const ParametricSolution& sol, std::size_t count = 100,
                                                   double min_distance = 1e-2);

// 50-digit residual check; `mu_override` serves as a negative control.
VerifyReport verify_solution(SolutionId id, std::size_t count = 100, std::optional<Rational> mu_override = {},
                             double threshold = kResidualThreshold, unsigned digits = 50);

// y -> y~ mapping solutions of PVI(mu) to PVI(-mu).
template <class C>
C mu_negate_transform(const C& y, const C& yx, const C& x, const C& mu) {
    const C one(1), two(2), three(3), four(4), eight(8), sixteen(16);
    const C xm = x - one, ym = y - one, yd = y - x;
    const C p0 = x * x * xm * xm;
    const C p1 = two * x * xm * ym * (two * mu * yd - y);
    const C p2 = y * ym * (y * ym - four * mu * ym * yd + four * mu * mu * yd * (yd - one));
    const C q0 = p0 * p0;
    const C q1 = -four * x * x * x * xm * xm * xm * y * ym;
    const C q2 = two * p0 * y * ym * (three * y * ym + four * mu * mu * yd * (one + x - three * y));
    const C q3 = four * x * xm * y * y * ym * ym *
                 (-y * ym - sixteen * mu * mu * mu * yd * yd + four * mu * mu * yd * (three * y - x - one));
    const C q4 = y * y * ym * ym *
                 (y * y * ym * ym + C(64) * mu * mu * mu * y * ym * yd * yd -
                  eight * mu * mu * y * ym * yd * (three * y - x - one) +
                  sixteen * mu * mu * mu * mu * yd * yd * (xm * xm + y * (two + two * x - three * y)));
    const C num = p0 * yx * yx + p1 * yx + p2;
    const C den = (((q0 * yx + q1) * yx + q2) * yx + q3) * yx + q4;
    using std::abs;
    if (abs(den) == 0) throw VanishingDenominator("transformation denominator vanishes");
    return y * num * num / den;
}

// Local branch of a parametric solution over a critical point.
struct BranchPoint {
    std::complex<double> s;   // parameter value (infinity flagged separately)
    bool at_infinity = false;
    int ramification = 1;     // local degree of x - x_c in the parameter
    Rational exact_exponent;  // order of y (or 1 - y) divided by the ramification
    double fitted_exponent = 0.0;
    double fitted_modulus = 0.0; // |a| in y ~ a x^l, 1 - y ~ a (1 - x)^l
};

// Branches over x = 0 (point Zero) or x = 1 (point One).
std::vector<BranchPoint> branch_points(const ParametricSolution& sol, CriticalPoint point);

// Pure-braid orbit of the solution's triple with the predicted (l, |a|) at the point.
struct PredictedBranch {
    ExactTriple triple;
    double l = 0.0;
    double modulus = 0.0;
};

std::vector<PredictedBranch> predicted_branches(const ParametricSolution& sol, CriticalPoint point);

// Great dodecahedron branches y_k ~ a x^l near 0, k = 1..18.
struct PuiseuxBranch {
    int k = 0;
    Rational exponent;
    std::complex<double> coefficient;
    std::string expression;
};

PuiseuxBranch h3pp_branch(int k);

} // namespace pvi
