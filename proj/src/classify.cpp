#include "pvi/classify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace pvi {

namespace {

const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);

Rational frac_part(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt m = num % den;
    if (m < 0) m += den;
    return Rational(m, den);
}

Rational norm_angle(const Rational& r) {
    Rational f = frac_part(r);
    return std::min(f, Rational(1) - f);
}

std::vector<Rational> sorted(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return v;
}

long long euler_phi(long long n) {
    long long r = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

int field_degree(long long n) { return n <= 1 ? 1 : static_cast<int>(euler_phi(2 * n) / 2); }

double cos2pi(const Rational& r) { return std::cos(2.0 * M_PI * static_cast<double>(r)); }

// Exact test that the cosines of the given angles sum to zero.
// Returns nullopt when the field would exceed the degree cap.
std::optional<bool> exact_block_sum(const std::vector<Rational>& phis, int degree_cap, int& max_degree) {
    long long n = 1;
    for (const auto& p : phis) {
        Rational two = 2 * p;
        n = std::lcm(n, static_cast<long long>(boost::multiprecision::denominator(two)));
    }
    const int deg = field_degree(n);
    if (deg > degree_cap) return std::nullopt;
    max_degree = std::max(max_degree, deg);
    ContextPtr ctx = field_new(static_cast<int>(n));
    FieldElement s = FieldElement::constant(ctx, Rational(0));
    for (const auto& p : phis) {
        Rational two = 2 * p;
        s += elem_from_cos(static_cast<long>(boost::multiprecision::numerator(two)),
                           static_cast<long>(boost::multiprecision::denominator(two)), ctx);
    }
    return s.is_zero();
}

// All set partitions of {0,1,2,3}, finest first.
std::vector<std::vector<std::vector<int>>> partitions4() {
    std::vector<std::vector<std::vector<int>>> out;
    std::function<void(int, std::vector<std::vector<int>>&)> rec = [&](int i, std::vector<std::vector<int>>& blocks) {
        if (i == 4) {
            out.push_back(blocks);
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(i);
            rec(i + 1, blocks);
            blocks[b].pop_back();
        }
        blocks.push_back({i});
        rec(i + 1, blocks);
        blocks.pop_back();
    };
    std::vector<std::vector<int>> blocks;
    rec(0, blocks);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return out;
}

bool verify_impl(const CosQuadruple& q, int degree_cap, int& max_degree) {
    static const auto parts = partitions4();
    bool capped = false;
    for (const auto& blocks : parts) {
        bool plausible = true;
        for (const auto& b : blocks) {
            double s = 0.0;
            for (int i : b) s += cos2pi(q.phi[static_cast<std::size_t>(i)]);
            if (std::abs(s) > 1e-9) plausible = false;
        }
        if (!plausible) continue;
        bool all_ok = true;
        bool any_capped = false;
        for (const auto& b : blocks) {
            std::vector<Rational> phis;
            for (int i : b) phis.push_back(q.phi[static_cast<std::size_t>(i)]);
            auto r = exact_block_sum(phis, degree_cap, max_degree);
            if (!r) {
                any_capped = true;
                all_ok = false;
                break;
            }
            if (!*r) {
                all_ok = false;
                break;
            }
        }
        if (all_ok) return true;
        capped = capped || any_capped;
    }
    if (capped) throw ResourceLimit("cosine sum needs a field above degree " + std::to_string(degree_cap));
    return false;
}

bool is_pair_zero(const Rational& a, const Rational& b) { return a + b == kHalf; }

bool matches_d2(const std::vector<Rational>& r) {
    for (const auto& x : r) {
        for (const Rational& phi : {x, Rational(1) - x}) {
            auto cand = sorted({norm_angle(phi), norm_angle(phi + Rational(1, 3)), norm_angle(phi + Rational(2, 3))});
            if (cand == r) return true;
        }
    }
    return false;
}

bool has_zero_pair_with(const std::vector<Rational>& r, const Rational& fixed) {
    // r sorted, size 3: one entry equals `fixed`, the other two cancel
    for (std::size_t i = 0; i < 3; ++i) {
        if (r[i] != fixed) continue;
        std::vector<Rational> rest;
        for (std::size_t j = 0; j < 3; ++j)
            if (j != i) rest.push_back(r[j]);
        if (is_pair_zero(rest[0], rest[1])) return true;
    }
    return false;
}

std::vector<Rational> remove_one(const std::array<Rational, 4>& phi, std::size_t i) {
    std::vector<Rational> r;
    for (std::size_t j = 0; j < 4; ++j)
        if (j != i) r.push_back(phi[j]);
    return r;
}

Family match_listed(const CosQuadruple& q) {
    const auto& p = q.phi;
    for (std::size_t i = 0; i < 4; ++i) {
        if (p[i] != kQuarter) continue;
        auto r = remove_one(p, i);
        if (r == sorted({Rational(1, 10), Rational(3, 10), Rational(1, 3)})) return Family::D1;
        if (matches_d2(r)) return Family::D2;
        if (has_zero_pair_with(r, kQuarter)) return Family::D3;
    }
    for (std::size_t i = 0; i < 4; ++i) {
        if (p[i] != 0) continue;
        auto r = remove_one(p, i);
        if (r == sorted({Rational(1, 4), Rational(1, 3), Rational(1, 3)})) return Family::E1;
        if (has_zero_pair_with(r, kHalf)) return Family::E2;
        if (r == sorted({Rational(1, 5), Rational(1, 3), Rational(2, 5)})) return Family::E3;
    }
    const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& pr : pairings)
        if (is_pair_zero(p[static_cast<std::size_t>(pr[0])], p[static_cast<std::size_t>(pr[1])]) &&
            is_pair_zero(p[static_cast<std::size_t>(pr[2])], p[static_cast<std::size_t>(pr[3])]))
            return Family::F;
    for (const auto& [fam, sq] : sporadic_quadruples())
        if (sq == q) return fam;
    return Family::None;
}

} // namespace

CosQuadruple CosQuadruple::normalized(std::array<Rational, 4> raw) {
    for (auto& r : raw) r = norm_angle(r);
    std::sort(raw.begin(), raw.end());
    return CosQuadruple{raw};
}

CosQuadruple CosQuadruple::global_flip() const {
    std::array<Rational, 4> r = phi;
    for (auto& x : r) x += kHalf;
    return normalized(r);
}

std::string CosQuadruple::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) s += ", ";
        s += phi[i].str();
    }
    return s + ")";
}

std::string family_name(Family f) {
    switch (f) {
    case Family::A: return "a";
    case Family::B: return "b";
    case Family::C: return "c";
    case Family::D1: return "d1";
    case Family::D2: return "d2";
    case Family::D3: return "d3";
    case Family::E1: return "e1";
    case Family::E2: return "e2";
    case Family::E3: return "e3";
    case Family::F: return "f";
    case Family::None: return "none";
    }
    return "none";
}

std::vector<std::pair<Family, CosQuadruple>> sporadic_quadruples() {
    return {
        {Family::A, CosQuadruple::normalized({Rational(1, 30), Rational(11, 30), Rational(2, 5), Rational(1, 6)})},
        {Family::B, CosQuadruple::normalized({Rational(7, 30), Rational(17, 30), Rational(1, 5), Rational(1, 6)})},
        {Family::C, CosQuadruple::normalized({Rational(1, 7), Rational(2, 7), Rational(3, 7), Rational(1, 6)})},
    };
}

bool verify_cos_sum(const CosQuadruple& q, int degree_cap) {
    int deg = 0;
    return verify_impl(q, degree_cap, deg);
}

FamilyMatch match_quadruple_family(const CosQuadruple& raw) {
    const CosQuadruple q = CosQuadruple::normalized(raw.phi);
    if (!verify_cos_sum(q)) throw NotASolution(q.to_string() + " does not satisfy the cosine equation");
    FamilyMatch m;
    m.family = match_listed(q);
    if (m.family == Family::None) {
        Family f = match_listed(q.global_flip());
        if (f != Family::None) m.flip_of = f;
    }
    return m;
}

TrigSearchResult trig_quadruple_search(int max_denominator, int degree_cap) {
    if (max_denominator < 2) throw InvalidArgument("max_denominator must be at least 2");
    std::vector<Rational> phis;
    for (int q = 1; q <= max_denominator; ++q)
        for (int p = 0; 2 * p <= q; ++p)
            if (std::gcd(p, q) == 1) phis.emplace_back(p, q);
    std::sort(phis.begin(), phis.end());
    const std::size_t m = phis.size();
    std::vector<double> c(m);
    for (std::size_t i = 0; i < m; ++i) c[i] = cos2pi(phis[i]);
    // index order by ascending cosine (descending phi)
    std::vector<std::size_t> by_cos(m);
    std::iota(by_cos.begin(), by_cos.end(), 0);
    std::sort(by_cos.begin(), by_cos.end(), [&](std::size_t a, std::size_t b) { return c[a] < c[b]; });
    std::vector<double> cs(m);
    for (std::size_t i = 0; i < m; ++i) cs[i] = c[by_cos[i]];

    TrigSearchResult res;
    std::set<CosQuadruple> found;
    const double tol = 1e-9;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            const double cij = c[i] + c[j];
            if (cij > 3.0 + tol || cij < -3.0 - tol) continue;
            for (std::size_t k = j; k < m; ++k) {
                const double target = -(cij + c[k]);
                if (target > 1.0 + tol || target < -1.0 - tol) continue;
                auto lo = std::lower_bound(cs.begin(), cs.end(), target - tol);
                for (auto it = lo; it != cs.end() && *it <= target + tol; ++it) {
                    const std::size_t l = by_cos[static_cast<std::size_t>(it - cs.begin())];
                    if (l < k) continue;
                    ++res.candidates_checked;
                    CosQuadruple q = CosQuadruple::normalized({phis[i], phis[j], phis[k], phis[l]});
                    if (found.count(q)) continue;
                    if (verify_impl(q, degree_cap, res.max_field_degree)) found.insert(q);
                }
            }
        }
    }
    res.solutions.assign(found.begin(), found.end());
    return res;
}

AngleTriple braid_angle_step(const AngleTriple& angles, int i, int j, int k, int denominator_bound) {
    if (i == j || j == k || i == k || i < 0 || j < 0 || k < 0 || i > 2 || j > 2 || k > 2)
        throw InvalidArgument("indices must be a permutation of 0, 1, 2");
    const ExactTriple x = triple_from_angles(angles[0], angles[1], angles[2]);
    const FieldElement xk = x(k) - x(i) * x(j); // cos(pi r'_k) = -x'_k / 2
    const double v = -xk.to_double() / 2.0;
    if (std::abs(v) > 1.0 + 1e-12) throw OutOfRange("|cos(pi r')| = " + std::to_string(std::abs(v)) + " > 1");
    const double r = std::acos(std::clamp(v, -1.0, 1.0)) / M_PI;
    for (int q = 1; q <= denominator_bound; ++q) {
        const long p = std::lround(r * q);
        if (std::abs(static_cast<double>(p) / q - r) > 1e-9) continue;
        FieldElement cand = elem_from_cos(p, q, field_new(q));
        if (cand == xk) {
            AngleTriple out = angles;
            out[static_cast<std::size_t>(i)] = Rational(1) - angles[static_cast<std::size_t>(i)];
            out[static_cast<std::size_t>(k)] = Rational(p, q);
            return out;
        }
    }
    throw Irrational("no rational angle with denominator <= " + std::to_string(denominator_bound));
}

std::string orbit_type_name(OrbitType t) {
    switch (t) {
    case OrbitType::Tetrahedron: return "Tetrahedron";
    case OrbitType::Cube: return "Cube";
    case OrbitType::Icosahedron: return "Icosahedron";
    case OrbitType::GreatIcosahedron: return "GreatIcosahedron";
    case OrbitType::GreatDodecahedron: return "GreatDodecahedron";
    case OrbitType::Infinite: return "Infinite";
    case OrbitType::Resonant: return "Resonant";
    case OrbitType::Unclassified: return "Unclassified";
    }
    return "Unclassified";
}

const std::vector<KnownOrbit>& known_orbits() {
    static std::vector<KnownOrbit> orbits;
    static std::once_flag once;
    std::call_once(once, [] {
        struct Seed {
            OrbitType type;
            const char* label;
            Rational r1, r2, r3, mu;
        };
        const Seed seeds[] = {
            {OrbitType::Tetrahedron, "cl1", Rational(1, 2), Rational(1, 3), Rational(1, 3), Rational(-1, 4)},
            {OrbitType::Cube, "cl2", Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(-1, 3)},
            {OrbitType::Icosahedron, "cl3", Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(-2, 5)},
            {OrbitType::GreatIcosahedron, "cl4", Rational(1, 2), Rational(1, 3), Rational(2, 5), Rational(-1, 5)},
            {OrbitType::GreatDodecahedron, "cl5", Rational(1, 2), Rational(1, 5), Rational(2, 5), Rational(-1, 3)},
        };
        for (const auto& s : seeds) {
            ExactTriple seed = triple_from_angles(s.r1, s.r2, s.r3);
            orbits.push_back({s.type, s.label, seed, s.mu, orbit_enumerate(seed, BraidGroup::FullB3)});
        }
    });
    return orbits;
}

Classification classify_triple(const ExactTriple& t, std::size_t budget) {
    Classification c;
    const FieldElement q = quadratic_invariant(t);
    if (q.is_zero() || q == FieldElement(4)) {
        c.type = OrbitType::Resonant;
        return c;
    }
    Orbit orbit;
    try {
        orbit = orbit_enumerate(t, BraidGroup::FullB3, budget);
    } catch (const BudgetExceededError& e) {
        c.type = OrbitType::Infinite;
        c.orbit_size = e.partial_count;
        return c;
    }
    c.orbit_size = orbit.size();
    const auto& known = known_orbits();
    for (std::size_t i = 0; i < known.size(); ++i) {
        if (known[i].orbit.size() != orbit.size()) continue;
        bool all = std::all_of(orbit.classes.begin(), orbit.classes.end(),
                               [&](const ExactTriple& x) { return known[i].orbit.index_of(x) != Orbit::npos; });
        if (all) {
            c.type = known[i].type;
            c.known_index = i;
            return c;
        }
    }
    return c;
}

} // namespace pvi
