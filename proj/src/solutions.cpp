#include "pvi/solutions.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace pvi {

namespace {

using Real100 = boost::multiprecision::cpp_bin_float_100;

IntPoly lin(long long c0, long long c1) { return poly_from({c0, c1}); }

ParametricSolution make(SolutionId id, std::string name, std::string description, Rational mu, IntPoly xn,
                        IntPoly xd, IntPoly yn, IntPoly yd, ExactTriple triple, bool printed) {
    ParametricSolution s;
    s.id = id;
    s.name = std::move(name);
    s.description = std::move(description);
    s.mu = mu;
    s.x = {std::move(xn), std::move(xd)};
    s.y = {std::move(yn), std::move(yd)};
    s.triple = common_field(triple);
    s.printed = printed;
    return s;
}

std::map<SolutionId, ParametricSolution> build_solutions() {
    std::map<SolutionId, ParametricSolution> m;
    const IntPoly sm1 = lin(-1, 1), sp1 = lin(1, 1), one3s = lin(1, 3), m13s = lin(-1, 3), one_m3s = lin(1, -3);
    const FieldElement zero(0), minus1(-1);
    const auto c4 = field_new(4), c5 = field_new(5);

    // Tetrahedron
    const IntPoly a3_yn = poly_product({poly_pow(sm1, 2), one3s, poly_pow(poly_from({-5, 0, 9}), 2)});
    const IntPoly a3_yd = poly_mul(sp1, poly_from({25, 0, -207, 0, 1539, 0, 243}));
    const IntPoly a3_xn = poly_mul(poly_pow(sm1, 3), one3s);
    const IntPoly a3_xd = poly_mul(poly_pow(sp1, 3), one_m3s);
    const ExactTriple tetra(minus1, zero, minus1);
    m.emplace(SolutionId::A3, make(SolutionId::A3, "a3", "tetrahedron, as printed", Rational(-1, 4), a3_xn, a3_xd,
                                   a3_yn, a3_yd, tetra, true));
    IntPoly a3c_xn = a3_xn;
    for (auto& c : a3c_xn) c = -c;
    m.emplace(SolutionId::A3c, make(SolutionId::A3c, "a3-corrected", "tetrahedron with x -> -x of the printed form",
                                    Rational(-1, 4), a3c_xn, a3_xd, a3_yn, a3_yd, tetra, false));

    // Cube
    const IntPoly two_ms = lin(2, -1), two_ps = lin(2, 1);
    m.emplace(SolutionId::B3,
              make(SolutionId::B3, "b3", "cube, as printed", Rational(-1, 3),
                   poly_mul(poly_pow(two_ms, 2), sp1), poly_mul(poly_pow(two_ps, 2), lin(1, -1)),
                   poly_mul(poly_pow(two_ms, 2), sp1), poly_mul(two_ps, poly_from({9, 0, -10, 0, 5})),
                   ExactTriple(minus1, zero, elem_from_cos(1, 4, c4)), true));

    // Icosahedral family: shared x(s)
    const IntPoly q_plus = poly_from({-1, 4, 1}), q_minus = poly_from({-1, -4, 1});
    const IntPoly ico_xn = poly_product({poly_pow(sm1, 5), poly_pow(one3s, 3), q_plus});
    const IntPoly ico_xd = poly_product({poly_pow(sp1, 5), poly_pow(m13s, 3), q_minus});
    const IntPoly h3_p = poly_from({49, 0, -2133, 0, 34308, 0, -259044, 0, 16422878, 0, -7616646, 0, 13758708, 0,
                                    5963724, 0, -719271, 0, 42483});
    const IntPoly h3_yn = poly_product({poly_pow(sm1, 2), poly_pow(one3s, 2), q_plus,
                                        poly_pow(poly_from({7, 0, -108, 0, 314, 0, -588, 0, 119}), 2)});
    const IntPoly h3_yd = poly_product({poly_pow(sp1, 3), m13s, h3_p});
    m.emplace(SolutionId::H3, make(SolutionId::H3, "h3", "icosahedron, as printed", Rational(-2, 5), ico_xn, ico_xd,
                                   h3_yn, h3_yd, ExactTriple(zero, minus1, elem_from_cos(1, 5, c5)), true));

    const IntPoly h3p_p = poly_from({9, 0, -342, 0, 4855, 0, -28852, 0, 63015, 0, -1942, 0, 121});
    const IntPoly h3p_yn = poly_product({poly_pow(sm1, 4), poly_pow(one3s, 2), q_plus,
                                         poly_pow(poly_from({3, 0, -30, 0, 11}), 2)});
    const IntPoly h3p_yd = poly_product({sp1, m13s, poly_from({1, 0, 3}), h3p_p});
    m.emplace(SolutionId::H3p, make(SolutionId::H3p, "h3p", "great icosahedron, as printed", Rational(-1, 5), ico_xn,
                                    ico_xd, h3p_yn, h3p_yd, ExactTriple(minus1, zero, elem_from_cos(2, 5, c5)), true));
    return m;
}

const std::map<SolutionId, ParametricSolution>& registry() {
    static std::map<SolutionId, ParametricSolution> m;
    static std::once_flag once;
    std::call_once(once, [] { m = build_solutions(); });
    return m;
}

// Roots of a squarefree rational polynomial, double precision.
std::vector<std::complex<double>> roots_of(const RatPoly& p) {
    const int n = static_cast<int>(p.size()) - 1;
    if (n < 1) return {};
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    const double lead = static_cast<double>(p.back());
    for (int i = 0; i < n; ++i) comp(0, i) = -static_cast<double>(p[static_cast<std::size_t>(n - 1 - i)]) / lead;
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    std::vector<std::complex<double>> r;
    for (int i = 0; i < n; ++i) r.push_back(es.eigenvalues()(i));
    return r;
}

RatPoly squarefree_part(const RatPoly& p) {
    RatPoly t = rat_trim(p);
    if (t.size() <= 1) return t;
    return rat_div(t, rat_gcd(t, rat_derivative(t)));
}

// Numerators whose zeros are excluded from residual sampling.
std::vector<RatPoly> excluded_polys(const ParametricSolution& sol) {
    const IntPoly& xn = sol.x.num;
    const IntPoly& xd = sol.x.den;
    const IntPoly& yn = sol.y.num;
    const IntPoly& yd = sol.y.den;
    const IntPoly dx = poly_sub(poly_mul(poly_derivative(xn), xd), poly_mul(xn, poly_derivative(xd)));
    return {to_rat(xd), to_rat(yd), to_rat(xn), to_rat(poly_sub(xn, xd)), to_rat(yn), to_rat(poly_sub(yn, yd)),
            to_rat(poly_sub(poly_mul(yn, xd), poly_mul(xn, yd))), to_rat(dx)};
}

Complex100 refine_root(const RatPoly& p, std::complex<double> guess) {
    const RatPoly dp = rat_derivative(p);
    Complex100 s(guess.real(), guess.imag());
    for (int it = 0; it < 200; ++it) {
        const Complex100 step = poly_eval(p, s) / poly_eval(dp, s);
        s -= step;
        if (abs(step) < Real100("1e-95") * (1 + abs(s))) break;
    }
    return s;
}

// Multiplicity of the root s of p, using its squarefree decomposition.
int multiplicity_at(const RatPoly& p, const Complex100& s) {
    int m = 0;
    for (const auto& [f, k] : squarefree(p)) {
        const Real100 v = abs(poly_eval(f, s));
        Real100 scale = 0;
        Complex100 pw(1);
        for (const auto& c : f) {
            scale += abs(Complex100(static_cast<double>(c))) * abs(pw);
            pw *= s;
        }
        if (v < Real100("1e-60") * (1 + scale)) m += k;
    }
    return m;
}

std::complex<double> to_std(const Complex100& c) {
    return {static_cast<double>(c.real()), static_cast<double>(c.imag())};
}

} // namespace

std::string solution_name(SolutionId id) { return parametric_solution(id).name; }

std::optional<SolutionId> solution_from_name(const std::string& name) {
    for (const auto& [id, s] : registry())
        if (s.name == name) return id;
    return std::nullopt;
}

std::vector<SolutionId> all_solutions() {
    return {SolutionId::A3, SolutionId::B3, SolutionId::H3, SolutionId::H3p, SolutionId::A3c};
}

const ParametricSolution& parametric_solution(SolutionId id) { return registry().at(id); }

std::vector<std::complex<double>> residual_samples(const ParametricSolution& sol, std::size_t count,
                                                   double min_distance) {
    std::vector<std::complex<double>> bad;
    for (const auto& p : excluded_polys(sol)) {
        auto r = roots_of(squarefree_part(p));
        bad.insert(bad.end(), r.begin(), r.end());
    }
    std::vector<std::complex<double>> out;
    const double radius = 7.0 / 11.0;
    // fine angular grid, first admissible points in order
    const std::size_t grid = count * 8;
    for (std::size_t k = 0; k < grid && out.size() < count; k += 1) {
        const std::size_t idx = (k * 8) % grid + (k * 8) / grid; // interleave so samples spread over the circle
        const double theta = 2.0 * M_PI * (static_cast<double>(idx) + 0.5) / static_cast<double>(grid);
        const std::complex<double> s = std::polar(radius, theta);
        bool ok = std::all_of(bad.begin(), bad.end(), [&](auto b) { return std::abs(s - b) >= min_distance; });
        if (ok) out.push_back(s);
    }
    return out;
}

namespace {

template <class C>
VerifyReport verify_with(SolutionId id, std::size_t count, const Rational& mu, double threshold) {
    const ParametricSolution& sol = parametric_solution(id);
    const C mu_c = C(boost::multiprecision::numerator(mu).str().c_str()) /
                   C(boost::multiprecision::denominator(mu).str().c_str());
    VerifyReport rep;
    rep.id = id;
    for (const auto& s : residual_samples(sol, count)) {
        const C sc(s.real(), s.imag());
        double r;
        try {
            r = static_cast<double>(pvi_residual(sol, sc, mu_c));
        } catch (const DegenerateSample&) {
            continue;
        }
        ++rep.samples;
        rep.max_residual = std::max(rep.max_residual, r);
        if (!(r <= threshold)) rep.failing.push_back({s, r});
    }
    rep.passed = rep.samples >= count && rep.failing.empty();
    return rep;
}

} // namespace

VerifyReport verify_solution(SolutionId id, std::size_t count, std::optional<Rational> mu_override,
                             double threshold, unsigned digits) {
    const Rational mu = mu_override.value_or(parametric_solution(id).mu);
    if (digits == 50) return verify_with<Complex50>(id, count, mu, threshold);
    if (digits == 100) return verify_with<Complex100>(id, count, mu, threshold);
    throw InvalidArgument("supported working precisions are 50 and 100 digits");
}

std::vector<BranchPoint> branch_points(const ParametricSolution& sol, CriticalPoint point) {
    if (point == CriticalPoint::Infinity) throw InvalidArgument("branch points are listed over 0 and 1");
    const bool at_one = point == CriticalPoint::One;
    const IntPoly xt = at_one ? poly_sub(sol.x.num, sol.x.den) : sol.x.num; // numerator of x or x - 1
    const IntPoly yt = at_one ? poly_sub(sol.y.num, sol.y.den) : sol.y.num;
    const RatPoly xr = to_rat(xt), yr = to_rat(yt), ydr = to_rat(sol.y.den);
    std::vector<BranchPoint> out;

    auto fit = [&](BranchPoint& b, auto param) {
        // |x - xc| and |y - yc| from the exact numerators, at two nearby parameters
        auto local = [&](const Real100& h) {
            const Complex100 s = param(h);
            const Real100 x = abs(poly_eval(xt, s) / poly_eval(sol.x.den, s));
            const Real100 y = abs(poly_eval(yt, s) / poly_eval(sol.y.den, s));
            return std::pair<Real100, Real100>(log(x), log(y));
        };
        const auto [lx1, ly1] = local(Real100("1e-12"));
        const auto [lx2, ly2] = local(Real100("1e-13"));
        const Real100 l = (ly1 - ly2) / (lx1 - lx2);
        b.fitted_exponent = static_cast<double>(l);
        b.fitted_modulus = static_cast<double>(exp(ly2 - l * lx2));
    };

    for (const auto& [f, k] : squarefree(xr)) {
        for (const auto& guess : roots_of(f)) {
            const Complex100 s0 = refine_root(f, guess);
            BranchPoint b;
            b.s = to_std(s0);
            b.ramification = k;
            const int m = multiplicity_at(yr, s0) - multiplicity_at(ydr, s0);
            b.exact_exponent = Rational(m, k);
            fit(b, [&](const Real100& h) { return s0 + Complex100(h); });
            out.push_back(b);
        }
    }
    const int dn = poly_degree(xt), dd = poly_degree(sol.x.den);
    if (dn < dd) {
        BranchPoint b;
        b.at_infinity = true;
        b.ramification = dd - dn;
        b.exact_exponent = Rational(poly_degree(sol.y.den) - poly_degree(yt), dd - dn);
        fit(b, [&](const Real100& h) { return Complex100(1) / Complex100(h); });
        out.push_back(b);
    }
    return out;
}

std::vector<PredictedBranch> predicted_branches(const ParametricSolution& sol, CriticalPoint point) {
    const Orbit orbit = orbit_enumerate(sol.triple, BraidGroup::PureP3);
    const double mu = static_cast<double>(sol.mu);
    std::vector<PredictedBranch> out;
    for (const auto& c : orbit.classes) {
        const AsymptoticDatum d = coefficient_at(point, to_real(c), mu);
        out.push_back({c, d.l, std::abs(d.a)});
    }
    return out;
}

PuiseuxBranch h3pp_branch(int k) {
    if (k < 1 || k > 18) throw OutOfRange("branch index must lie in 1..18");
    PuiseuxBranch b;
    b.k = k;
    const std::complex<double> I(0.0, 1.0);
    if (k <= 5) {
        b.exponent = Rational(4, 5);
        b.coefficient = std::exp(2.0 * M_PI * I * (k / 5.0)) * (49.0 / 169.0) * std::pow(6.0, -0.4);
        b.expression = "e^(2 pi i " + std::to_string(k) + "/5) (7/13)^2 6^(-2/5)";
    } else if (k <= 10) {
        const int j = k - 5;
        b.exponent = Rational(2, 5);
        b.coefficient = std::exp(2.0 * M_PI * I * (j / 5.0)) * std::pow(6.0, 0.8) / 361.0;
        b.expression = "e^(2 pi i " + std::to_string(j) + "/5) 6^(4/5) / 19^2";
    } else if (k <= 16) {
        const int j = k <= 13 ? k - 10 : k - 13;
        const double sg = k <= 13 ? 1.0 : -1.0;
        b.exponent = Rational(2, 3);
        b.coefficient = std::exp(2.0 * M_PI * I * (j / 3.0)) * std::pow(2.0, 2.0 / 3.0) / 18.0 *
                        (1.0 + sg * I * std::sqrt(15.0)) / 4.0;
        b.expression = "e^(2 pi i " + std::to_string(j) + "/3) 2^(2/3)/18 (1" + (sg > 0 ? "+" : "-") + "i sqrt15)/4";
    } else {
        b.exponent = Rational(1);
        b.coefficient = k == 17 ? (3.0 + std::sqrt(5.0)) / 6.0 : (3.0 - std::sqrt(5.0)) / 6.0;
        b.expression = k == 17 ? "(3+sqrt5)/6" : "(3-sqrt5)/6";
    }
    return b;
}

} // namespace pvi
