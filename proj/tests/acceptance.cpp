// One PASS/FAIL line per acceptance criterion, with details on the following lines.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "pvi/classify.hpp"
#include "pvi/connection.hpp"
#include "pvi/continuation.hpp"
#include "pvi/errors.hpp"
#include "pvi/monodromy.hpp"
#include "pvi/reflect.hpp"
#include "pvi/solutions.hpp"

using namespace pvi;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << "  failed: " << what << '\n';
        }
    }
};

int failures = 0;

template <class F>
void criterion(int n, const std::string& title, F&& body) {
    Outcome o;
    try {
        body(o);
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail << "  exception: " << e.what() << '\n';
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title << '\n' << o.detail.str();
    if (!o.pass) ++failures;
}

const std::vector<std::size_t> kSizes = {4, 9, 10, 10, 18};

void orbit_lengths(Outcome& o) {
    const auto& known = known_orbits();
    for (std::size_t i = 0; i < known.size(); ++i) {
        const auto t0 = Clock::now();
        const Orbit orb = orbit_enumerate(known[i].seed, BraidGroup::FullB3);
        const double dt = seconds_since(t0);
        o.detail << "  " << known[i].label << ": size " << orb.size() << " in " << dt << " s\n";
        o.require(orb.size() == kSizes[i], known[i].label + " size");
        o.require(dt < 1.0, known[i].label + " runtime");
    }
}

void pure_braid_split(Outcome& o) {
    for (const auto& k : known_orbits()) {
        const auto parts = split_orbit(k.orbit, BraidGroup::PureP3);
        std::vector<std::size_t> sizes;
        for (const auto& p : parts) sizes.push_back(p.size());
        std::sort(sizes.begin(), sizes.end());
        o.detail << "  " << k.label << ":";
        for (auto s : sizes) o.detail << ' ' << s;
        o.detail << '\n';
        if (k.type == OrbitType::Cube) o.require(sizes == std::vector<std::size_t>{3, 3, 3}, "cube splits 3+3+3");
        else o.require(sizes.size() == 1 && sizes[0] == k.orbit.size(), k.label + " stays whole");
    }
}

void mu_classes(Outcome& o) {
    const long p[] = {-1, -1, -2, -1, -1}, q[] = {4, 3, 5, 5, 3};
    const auto& known = known_orbits();
    for (std::size_t i = 0; i < known.size(); ++i) {
        const MuClass mc = mu_from_triple(known[i].seed);
        const double mu = static_cast<double>(p[i]) / q[i];
        const double s2 = std::pow(std::sin(std::numbers::pi * mu), 2);
        const double err = std::abs(mc.sin_sq_pi_mu.to_double() - s2);
        o.detail << "  " << known[i].label << ": sin^2(pi mu) = " << mc.sin_sq_pi_mu.to_string() << ", mu = " << p[i]
                 << "/" << q[i] << ", numeric error " << err << '\n';
        o.require(mu_matches(known[i].seed, p[i], q[i]), known[i].label + " exact mu class");
        o.require(err < 1e-12, known[i].label + " numeric mu");
    }
}

void reflection_groups(Outcome& o) {
    const std::size_t orders[] = {24, 48, 120, 120, 120};
    const std::string tags[] = {"A3", "B3", "H3", "H3", "H3"};
    const auto t0 = Clock::now();
    const auto& known = known_orbits();
    for (std::size_t i = 0; i < known.size(); ++i) {
        const ReflectionSystem rs = reflections(known[i].seed);
        const ClosureResult c = group_closure(rs);
        o.detail << "  " << known[i].label << ": order " << c.order << " " << c.coxeter_type << '\n';
        o.require(c.order == orders[i] && c.coxeter_type == tags[i], known[i].label + " closure");
        for (const char* w : {"b1", "b2", "b1^-1 b2", "b2 b2 b1^-1"}) {
            const ReflectionSystem img = braid_on_generators(BraidWord::parse(w), rs);
            const ClosureResult ci = group_closure(img);
            o.require(ci.order == c.order && ci.coxeter_type == c.coxeter_type,
                      known[i].label + " closure after " + w);
            o.require(ExactTripleEq{}(canonical(img.triple()), canonical(braid_apply(BraidWord::parse(w), common_field(known[i].seed)))),
                      known[i].label + " Gram of braided system after " + w);
        }
    }
    const double dt = seconds_since(t0);
    o.detail << "  total " << dt << " s\n";
    o.require(dt < 10.0, "runtime");
}

void gordan_search(Outcome& o) {
    const auto t0 = Clock::now();
    const TrigSearchResult r = trig_quadruple_search(42);
    const double dt = seconds_since(t0);
    o.detail << "  " << r.solutions.size() << " solutions, max field degree " << r.max_field_degree << ", " << dt
             << " s\n";
    std::vector<CosQuadruple> sporadic, flips;
    for (const auto& q : r.solutions) {
        const FamilyMatch m = match_quadruple_family(q);
        if (m.family == Family::A || m.family == Family::B || m.family == Family::C) sporadic.push_back(q);
        if (m.family == Family::None) {
            if (m.flip_of) flips.push_back(q);
            else o.require(false, "unexplained solution " + q.to_string());
        }
    }
    for (const auto& [fam, q] : sporadic_quadruples()) {
        const bool found = std::find(sporadic.begin(), sporadic.end(), q) != sporadic.end();
        o.detail << "  sporadic (" << family_name(fam) << ") " << q.to_string() << (found ? " found" : " MISSING")
                 << '\n';
        o.require(found, "sporadic " + family_name(fam));
    }
    o.require(sporadic.size() == 3, "exactly three sporadic solutions");
    // The listed families are closed under permutations and phi -> -phi only; the
    // simultaneous shift phi -> phi + 1/2 also preserves the equation.
    for (const auto& q : flips)
        o.detail << "  erratum: " << q.to_string() << " is outside the listed families; it is the image of ("
                 << family_name(*match_quadruple_family(q).flip_of) << ") under phi -> phi + 1/2\n";
}

void residuals(Outcome& o) {
    for (SolutionId id : all_solutions()) {
        const auto t0 = Clock::now();
        const VerifyReport r = verify_solution(id, 100);
        const auto& sol = parametric_solution(id);
        const std::string tag = r.passed ? "verified" : "ERRATUM";
        o.detail << "  " << sol.name << (sol.printed ? "" : " (candidate correction)") << ": " << tag << ", "
                 << r.samples << " samples, max residual " << r.max_residual << ", " << seconds_since(t0) << " s\n";
        o.require(r.samples >= 100, sol.name + " sample count");
        if (!r.passed) {
            o.require(!r.failing.empty(), sol.name + " erratum lists failing samples");
            for (std::size_t i = 0; i < std::min<std::size_t>(3, r.failing.size()); ++i)
                o.detail << "    s = " << r.failing[i].s << " residual " << r.failing[i].residual << '\n';
        }
        if (!sol.printed) o.require(r.passed, sol.name + " candidate must verify");
    }
}

void connection_round_trip(Outcome& o) {
    std::size_t classes = 0;
    for (const auto& k : known_orbits()) {
        const double mu = static_cast<double>(k.mu);
        for (const ExactTriple& c : k.orbit.classes) {
            const RealTriple t = to_real(c);
            const AsymptoticDatum d = coefficient_at(CriticalPoint::Zero, t, mu);
            const bool direct = same_class(real_part_checked(triple_from_asymptotics(d.a, d.sigma, mu, 1e-8)), t, 1e-8);
            const bool via = same_class(real_part_checked(triple_via_matrices(d.a, d.sigma, mu)), t, 1e-8);
            o.require(direct && via, k.label + " class " + std::to_string(classes));
            ++classes;
        }
    }
    o.detail << "  " << classes << " classes, closed form and matrix routes\n";
    o.require(classes == 51, "51 classes");
}

struct Sheet {
    double l, modulus;
};

// exponents agreeing to 1e-6 count as equal so moduli pair up
void sort_sheets(std::vector<Sheet>& v) {
    auto key = [](const Sheet& s) { return std::make_pair(std::llround(s.l * 1e6), s.modulus); };
    std::sort(v.begin(), v.end(), [&](const Sheet& a, const Sheet& b) { return key(a) < key(b); });
}

std::vector<Sheet> fitted_sheets(const ParametricSolution& sol, CriticalPoint p) {
    std::vector<Sheet> out;
    for (const auto& b : branch_points(sol, p))
        for (int i = 0; i < b.ramification; ++i) out.push_back({b.fitted_exponent, b.fitted_modulus});
    sort_sheets(out);
    return out;
}

std::vector<Sheet> predicted_sheets(const ParametricSolution& sol, CriticalPoint p) {
    std::vector<Sheet> out;
    for (const auto& b : predicted_branches(sol, p)) out.push_back({b.l, b.modulus});
    sort_sheets(out);
    return out;
}

void branch_bookkeeping(Outcome& o) {
    for (SolutionId id : all_solutions()) {
        const auto& sol = parametric_solution(id);
        if (!verify_solution(id, 20).passed) continue;
        for (CriticalPoint p : {CriticalPoint::Zero, CriticalPoint::One}) {
            const auto fit = fitted_sheets(sol, p), pred = predicted_sheets(sol, p);
            o.detail << "  " << sol.name << " at " << point_name(p) << ": exponents";
            for (const auto& s : fit) o.detail << ' ' << s.l;
            o.detail << '\n';
            bool ok = fit.size() == pred.size();
            double worst_mod = 0.0;
            for (std::size_t i = 0; ok && i < fit.size(); ++i) {
                ok = std::abs(fit[i].l - pred[i].l) < 1e-6;
                worst_mod = std::max(worst_mod, std::abs(fit[i].modulus - pred[i].modulus) / pred[i].modulus);
            }
            o.detail << "    predicted multiset matched: " << (ok ? "yes" : "no") << ", worst |a| deviation "
                     << worst_mod << '\n';
            o.require(ok, sol.name + " exponents at " + point_name(p));
            o.require(ok && worst_mod < 1e-4, sol.name + " moduli at " + point_name(p));
        }
    }
}

void continuation(Outcome& o) {
    const double r5 = std::sqrt(5.0);
    const std::pair<SolutionId, double> branches[] = {
        {SolutionId::H3p, -2.0 + r5}, {SolutionId::H3p, -2.0 - r5}, {SolutionId::A3c, -1.0 / 3.0}};
    for (const auto& [id, s0] : branches) {
        const ContinuationReport r = continue_branch(id, s0);
        const std::string name = solution_name(id) + " s0=" + std::to_string(s0);
        const double dl = std::abs(r.fitted.datum.l - r.predicted.l);
        const double da = std::abs(std::abs(r.fitted.datum.a) / std::abs(r.predicted.a) - 1.0);
        o.detail << "  " << name << ": a0 " << r.at_zero.a.real() << ", endpoint error " << r.endpoint_error
                 << ", l1 " << r.fitted.datum.l << " (predicted " << r.predicted.l << "), |a1| "
                 << std::abs(r.fitted.datum.a) << " (predicted " << std::abs(r.predicted.a) << "), " << r.seconds
                 << " s, " << r.trajectory.events.size() << " pole events\n";
        o.require(r.endpoint_error < 1e-6, name + " endpoint");
        o.require(dl < 1e-3, name + " l1");
        o.require(da < 1e-2, name + " |a1|");
        o.require(r.seconds < 5.0, name + " runtime");
    }
}

ExactTriple random_triple(std::mt19937& rng) {
    static const int fields[] = {1, 4, 5, 7, 12};
    std::uniform_int_distribution<int> pick(0, 4), num(-12, 12), den(1, 9);
    auto elem = [&]() {
        const int n = fields[pick(rng)];
        if (n == 1) return FieldElement(Rational(num(rng), den(rng)));
        const auto ctx = field_new(n);
        std::vector<Rational> c;
        for (int i = 0; i < ctx->degree(); ++i) c.push_back(Rational(num(rng), den(rng)));
        return FieldElement(ctx, c);
    };
    return ExactTriple(elem(), elem(), elem());
}

void invariant_suites(Outcome& o) {
    std::mt19937 rng(20260101);
    int q_fail = 0, braid_fail = 0, cycle_fail = 0;
    const BraidWord b121 = BraidWord::parse("b1 b2 b1"), b212 = BraidWord::parse("b2 b1 b2");
    const BraidWord cube = BraidWord::parse("b1 b2 b1 b2 b1 b2");
    for (int i = 0; i < 1000; ++i) {
        const ExactTriple t = common_field(random_triple(rng));
        const FieldElement q = quadratic_invariant(t);
        for (Gen g : {Gen::B1, Gen::B2})
            if (quadratic_invariant(apply_generator(g, t)) != q) ++q_fail;
        for (Symmetry s : {Symmetry::I1, Symmetry::I2})
            if (quadratic_invariant(symmetry_apply(s, t)) != q) ++q_fail;
        if (!ExactTripleEq{}(braid_apply(b121, t), braid_apply(b212, t))) ++braid_fail;
        if (!same_class(braid_apply(cube, t), t)) ++cycle_fail;
    }
    o.detail << "  1000 random exact triples: Q violations " << q_fail << ", braid relation violations "
             << braid_fail << ", (b1 b2)^3 class violations " << cycle_fail << '\n';
    o.require(q_fail == 0 && braid_fail == 0 && cycle_fail == 0, "exact invariants");

    double trace_err = 0.0, minf_err = 0.0;
    bool minf_ok = true;
    for (const auto& k : known_orbits()) {
        for (const ExactTriple& c : k.orbit.classes) {
            const RealTriple t = to_real(c);
            const CanonicalMatrices m = canonical_matrices(t, true);
            RealTriple s;
            for (int i = 0; i < 3; ++i) s(i) = t((i + m.shift) % 3);
            trace_err = std::max({trace_err, std::abs((m.m1 * m.m2).trace() - (2.0 - s(0) * s(0))),
                                  std::abs((m.m3 * m.m2).trace() - (2.0 - s(1) * s(1))),
                                  std::abs((m.m1 * m.m3).trace() - (2.0 - s(2) * s(2)))});
            const MInfinityReport r = m_infinity_check(m.m1, m.m2, m.m3, static_cast<double>(k.mu), 1e-10);
            minf_ok = minf_ok && r.ok;
            minf_err = std::max(minf_err, r.max_error);
        }
    }
    o.detail << "  trace identities max error " << trace_err << ", M_inf eigenvalue max error " << minf_err << '\n';
    o.require(trace_err < 1e-10, "trace identities");
    o.require(minf_ok, "M_inf eigenvalues");

    double gamma_err = 0.0;
    std::uniform_real_distribution<double> re(-4.5, 6.0), im(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const Complex z(re(rng), im(rng));
        gamma_err = std::max(gamma_err, std::abs(complex_gamma(z + 1.0) - z * complex_gamma(z)) / std::abs(complex_gamma(z + 1.0)));
    }
    o.detail << "  Gamma recurrence max relative error " << gamma_err << '\n';
    o.require(gamma_err < 1e-12, "Gamma recurrence");
}

void puiseux_consistency(Outcome& o) {
    const KnownOrbit& gd = known_orbits()[4];
    const double mu = static_cast<double>(gd.mu);
    std::vector<Sheet> printed, predicted;
    for (int k = 1; k <= 18; ++k) {
        const PuiseuxBranch b = h3pp_branch(k);
        printed.push_back({static_cast<double>(b.exponent), std::abs(b.coefficient)});
    }
    for (const ExactTriple& c : gd.orbit.classes) {
        const AsymptoticDatum d = coefficient_at(CriticalPoint::Zero, to_real(c), mu);
        predicted.push_back({d.l, std::abs(d.a)});
    }
    auto by_l = [](auto& a, auto& b) { return std::tie(a.l, a.modulus) < std::tie(b.l, b.modulus); };
    std::sort(printed.begin(), printed.end(), by_l);
    std::sort(predicted.begin(), predicted.end(), by_l);
    int errata = 0;
    bool exponents = printed.size() == predicted.size();
    for (std::size_t i = 0; exponents && i < printed.size(); ++i) {
        exponents = std::abs(printed[i].l - predicted[i].l) < 1e-12;
        const double dev = std::abs(printed[i].modulus - predicted[i].modulus);
        if (dev > 1e-6) {
            ++errata;
            o.detail << "  erratum: l = " << printed[i].l << " printed |a| " << printed[i].modulus << ", predicted "
                     << predicted[i].modulus << '\n';
        }
    }
    o.detail << "  18 branches, exponent multisets " << (exponents ? "equal" : "differ") << ", " << errata
             << " coefficient discrepancies\n";
    o.require(exponents, "exponent multiset");
}

} // namespace

int main() {
    criterion(1, "orbit lengths 4, 9, 10, 10, 18", orbit_lengths);
    criterion(2, "pure-braid splitting", pure_braid_split);
    criterion(3, "mu classes", mu_classes);
    criterion(4, "reflection groups", reflection_groups);
    criterion(5, "vanishing four-cosine sums up to denominator 42", gordan_search);
    criterion(6, "algebraic-solution residuals (pass or documented erratum)", residuals);
    criterion(7, "connection round trip on 51 classes", connection_round_trip);
    criterion(8, "branch exponents at 0 and 1", branch_bookkeeping);
    criterion(9, "numerical continuation from 0 to 1", continuation);
    criterion(10, "invariant suites", invariant_suites);
    criterion(11, "great dodecahedron Puiseux data", puiseux_consistency);
    return failures == 0 ? 0 : 1;
}
