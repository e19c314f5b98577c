#include "pvi/triples.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace pvi {

BraidWord BraidWord::parse(const std::string& text) {
    BraidWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "b1" || tok == "B1") w.letters.push_back(Gen::B1);
        else if (tok == "b1^-1" || tok == "B1^-1" || tok == "b1i") w.letters.push_back(Gen::B1inv);
        else if (tok == "b2" || tok == "B2") w.letters.push_back(Gen::B2);
        else if (tok == "b2^-1" || tok == "B2^-1" || tok == "b2i") w.letters.push_back(Gen::B2inv);
        else throw InvalidArgument("unknown braid letter '" + tok + "'");
    }
    return w;
}

std::string BraidWord::to_string() const {
    std::string s;
    for (Gen g : letters) {
        if (!s.empty()) s += ' ';
        switch (g) {
        case Gen::B1: s += "b1"; break;
        case Gen::B1inv: s += "b1^-1"; break;
        case Gen::B2: s += "b2"; break;
        case Gen::B2inv: s += "b2^-1"; break;
        }
    }
    return s;
}

BraidWord BraidWord::inverse() const {
    BraidWord r;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        switch (*it) {
        case Gen::B1: r.letters.push_back(Gen::B1inv); break;
        case Gen::B1inv: r.letters.push_back(Gen::B1); break;
        case Gen::B2: r.letters.push_back(Gen::B2inv); break;
        case Gen::B2inv: r.letters.push_back(Gen::B2); break;
        }
    }
    return r;
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
    BraidWord r = *this;
    r.letters.insert(r.letters.end(), rhs.letters.begin(), rhs.letters.end());
    return r;
}

namespace {

int lex_compare(const ExactTriple& a, const ExactTriple& b) {
    for (int i = 0; i < 3; ++i) {
        int c = real_compare(a(i), b(i));
        if (c != 0) return c;
    }
    return 0;
}

} // namespace

ExactTriple canonical(const ExactTriple& t) {
    ExactTriple best = t;
    for (const auto& v : sign_variants(t))
        if (lex_compare(v, best) > 0) best = v;
    return best;
}

RealTriple canonical(const RealTriple& t, double tol) {
    RealTriple best = t;
    auto greater = [tol](const RealTriple& a, const RealTriple& b) {
        for (int i = 0; i < 3; ++i) {
            if (a(i) > b(i) + tol) return true;
            if (a(i) < b(i) - tol) return false;
        }
        return false;
    };
    for (const auto& v : sign_variants(t))
        if (greater(v, best)) best = v;
    return best;
}

bool same_class(const ExactTriple& a, const ExactTriple& b) {
    return ExactTripleEq{}(canonical(a), canonical(b));
}

bool same_class(const RealTriple& a, const RealTriple& b, double tol) {
    for (const auto& v : sign_variants(a))
        if ((v - b).cwiseAbs().maxCoeff() <= tol) return true;
    return false;
}

ExactTriple triple_from_angles(const Rational& r1, const Rational& r2, const Rational& r3) {
    auto coord = [](const Rational& r) {
        const long p = static_cast<long>(boost::multiprecision::numerator(r));
        const long q = static_cast<long>(boost::multiprecision::denominator(r));
        FieldElement e = elem_from_cos(p, q, field_new(static_cast<int>(q)));
        return e.is_rational() ? FieldElement(e.rational_value()) : e;
    };
    return common_field(ExactTriple(coord(r1), coord(r2), coord(r3)));
}

bool is_admissible(const ExactTriple& t) {
    int zeros = 0;
    for (int i = 0; i < 3; ++i) zeros += t(i).is_zero() ? 1 : 0;
    return zeros <= 1;
}

RealTriple to_real(const ExactTriple& t) {
    return RealTriple(t(0).to_double(), t(1).to_double(), t(2).to_double());
}

ExactTriple common_field(const ExactTriple& t) {
    // rational coordinates impose no field
    auto field_of = [](const FieldElement& e) { return e.is_rational() ? ContextPtr() : e.context(); };
    ContextPtr ctx = compound_context(compound_context(field_of(t(0)), field_of(t(1))), field_of(t(2)));
    return ExactTriple(t(0).lift(ctx), t(1).lift(ctx), t(2).lift(ctx));
}

std::size_t ExactTripleHash::operator()(const ExactTriple& t) const {
    std::size_t h = 0;
    for (int i = 0; i < 3; ++i) h = h * 1000003u ^ t(i).hash();
    return h;
}

std::size_t Orbit::index_of(const ExactTriple& t) const {
    const ExactTriple c = canonical(t);
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (ExactTripleEq{}(classes[i], c)) return i;
    return npos;
}

MuClass mu_from_triple(const ExactTriple& t) {
    const FieldElement q = quadratic_invariant(t);
    if (q.is_zero() || (q - FieldElement(4)).is_zero())
        throw ResonantMu("quadratic invariant is " + q.to_string() + ", so 2mu is an integer");
    MuClass m;
    m.sin_sq_pi_mu = q * FieldElement(Rational(1, 4));
    const double s = m.sin_sq_pi_mu.to_double();
    if (s >= 0.0 && s <= 1.0) m.representative_mu = std::asin(std::sqrt(s)) / M_PI;
    return m;
}

bool mu_matches(const ExactTriple& t, long p, long q) {
    // 4 sin^2(pi p/q) = 2 - 2cos(2 pi p/q) = 2 + elem_from_cos(2p, q)
    const ExactTriple c = common_field(t);
    ContextPtr ctx = compound_context(c(0).context(), field_new(static_cast<int>(q)));
    const FieldElement lhs = quadratic_invariant(ExactTriple(c(0).lift(ctx), c(1).lift(ctx), c(2).lift(ctx)));
    const FieldElement rhs = FieldElement(2) + elem_from_cos(2 * p, q, ctx);
    return lhs == rhs;
}

std::vector<BraidWord> group_generators(BraidGroup g) {
    const BraidWord b1{{Gen::B1}}, b2{{Gen::B2}};
    std::vector<BraidWord> gens;
    if (g == BraidGroup::FullB3) {
        gens = {b1, b2};
    } else {
        // beta1^2, beta2^2 and beta2^-1 beta1^2 beta2
        gens = {b1 * b1, b2 * b2, b2.inverse() * b1 * b1 * b2};
    }
    const std::size_t n = gens.size();
    for (std::size_t i = 0; i < n; ++i) gens.push_back(gens[i].inverse());
    return gens;
}

Orbit orbit_enumerate(const ExactTriple& seed, BraidGroup group, std::size_t budget) {
    const auto gens = group_generators(group);
    Orbit orbit;
    std::unordered_set<ExactTriple, ExactTripleHash, ExactTripleEq> seen;
    std::deque<ExactTriple> frontier;
    const ExactTriple start = canonical(common_field(seed));
    seen.insert(start);
    orbit.classes.push_back(start);
    frontier.push_back(start);
    while (!frontier.empty()) {
        ExactTriple cur = frontier.front();
        frontier.pop_front();
        for (const auto& w : gens) {
            ExactTriple img = canonical(braid_apply(w, cur));
            if (seen.insert(img).second) {
                if (orbit.classes.size() >= budget) throw BudgetExceededError(orbit.classes.size());
                orbit.classes.push_back(img);
                frontier.push_back(img);
            }
        }
    }
    return orbit;
}

std::vector<Orbit> split_orbit(const Orbit& orbit, BraidGroup group) {
    std::vector<bool> used(orbit.size(), false);
    std::vector<Orbit> parts;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        if (used[i]) continue;
        Orbit part = orbit_enumerate(orbit.classes[i], group, orbit.size());
        for (const auto& c : part.classes) {
            std::size_t j = orbit.index_of(c);
            if (j == Orbit::npos) throw Error("Internal", "sub-orbit leaves the orbit");
            used[j] = true;
        }
        parts.push_back(std::move(part));
    }
    return parts;
}

namespace {

bool all_nonzero(const RealTriple& t) {
    return t(0) != 0.0 && t(1) != 0.0 && t(2) != 0.0;
}

// Shortest braid making every coordinate nonzero.
BraidWord nonzero_braid(const RealTriple& t) {
    if (all_nonzero(t)) return {};
    std::deque<BraidWord> queue;
    queue.push_back({});
    const Gen letters[] = {Gen::B1, Gen::B2, Gen::B1inv, Gen::B2inv};
    while (!queue.empty()) {
        BraidWord w = queue.front();
        queue.pop_front();
        for (Gen g : letters) {
            BraidWord next = BraidWord{{g}} * w;
            if (all_nonzero(braid_apply(next, t))) return next;
            if (next.size() < 6) queue.push_back(next);
        }
    }
    throw NotApplicable("no short braid makes all coordinates nonzero");
}

} // namespace

EscapeResult escape_braid(const RealTriple& t, int max_iterations) {
    const double q = quadratic_invariant(t);
    if (q <= 4.0) throw NotApplicable("quadratic invariant " + std::to_string(q) + " <= 4");
    const double c = std::sqrt(q - 4.0);
    EscapeResult r;
    r.word = nonzero_braid(t);
    RealTriple cur = braid_apply(r.word, t);
    const double xmin = cur.cwiseAbs().minCoeff();
    r.delta = std::min(xmin * xmin, 2.0 * c);
    r.sum_abs_start = cur.cwiseAbs().sum();
    const BraidWord bx{{Gen::B2}};
    const BraidWord by = BraidWord{{Gen::B2inv}} * BraidWord{{Gen::B1}} * BraidWord{{Gen::B2}};
    const BraidWord bz{{Gen::B1}};
    while (cur.cwiseAbs().maxCoeff() <= 2.0) {
        if (r.iterations >= max_iterations) throw NotApplicable("escape did not terminate");
        const double ax = std::abs(cur(0)), ay = std::abs(cur(1)), az = std::abs(cur(2));
        const BraidWord& step = (ax <= ay && ax <= az) ? bx : (ay <= ax && ay <= az) ? by : bz;
        cur = braid_apply(step, cur);
        r.word = step * r.word;
        ++r.iterations;
    }
    r.image = cur;
    return r;
}

} // namespace pvi
