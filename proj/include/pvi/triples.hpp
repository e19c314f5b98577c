#pragma once

// Monodromy triples (x1, x2, x3), their two-sign equivalence classes and the
// braid group action on them.

#include <Eigen/Core>

#include <cmath>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pvi/exactnum.hpp"

namespace pvi {

template <class Scalar>
using Triple = Eigen::Matrix<Scalar, 3, 1>;

using ExactTriple = Triple<FieldElement>;
using RealTriple = Triple<double>;

enum class Gen { B1, B1inv, B2, B2inv };

// Letters compose as maps: the rightmost letter acts first.
struct BraidWord {
    std::vector<Gen> letters;

    static BraidWord parse(const std::string& text); // e.g. "b2^-1 b1 b2"
    std::string to_string() const;
    BraidWord inverse() const;
    BraidWord operator*(const BraidWord& rhs) const; // (u*v)(t) = u(v(t))
    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }
};

enum class Symmetry { I1, I2 };
enum class BraidGroup { FullB3, PureP3 };

template <class Derived>
typename Derived::Scalar quadratic_invariant(const Eigen::MatrixBase<Derived>& t) {
    using S = typename Derived::Scalar;
    const S& a = t(0);
    const S& b = t(1);
    const S& c = t(2);
    return a * a + b * b + c * c - a * b * c;
}

template <class Scalar>
Triple<Scalar> apply_generator(Gen g, const Triple<Scalar>& t) {
    const Scalar& a = t(0);
    const Scalar& b = t(1);
    const Scalar& c = t(2);
    switch (g) {
    case Gen::B1: return Triple<Scalar>(-a, c - a * b, b);
    case Gen::B1inv: return Triple<Scalar>(-a, c, b - a * c);
    case Gen::B2: return Triple<Scalar>(c, -b, a - b * c);
    case Gen::B2inv: return Triple<Scalar>(c - a * b, -b, a);
    }
    return t;
}

template <class Scalar>
Triple<Scalar> braid_apply(const BraidWord& w, Triple<Scalar> t) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) t = apply_generator(*it, t);
    return t;
}

template <class Scalar>
Triple<Scalar> symmetry_apply(Symmetry kind, const Triple<Scalar>& t) {
    const Scalar& a = t(0);
    const Scalar& b = t(1);
    const Scalar& c = t(2);
    if (kind == Symmetry::I1) return Triple<Scalar>(c - a * b, -b, a);
    return Triple<Scalar>(-b, -a, a * b - c);
}

// The four members of the two-sign equivalence class, the input first.
template <class Scalar>
std::vector<Triple<Scalar>> sign_variants(const Triple<Scalar>& t) {
    return {t, Triple<Scalar>(-t(0), -t(1), t(2)), Triple<Scalar>(-t(0), t(1), -t(2)),
            Triple<Scalar>(t(0), -t(1), -t(2))};
}

// Lexicographically greatest real embedding among the sign variants.
ExactTriple canonical(const ExactTriple& t);
RealTriple canonical(const RealTriple& t, double tol = 1e-9);

bool same_class(const ExactTriple& a, const ExactTriple& b);
bool same_class(const RealTriple& a, const RealTriple& b, double tol = 1e-9);

bool is_admissible(const ExactTriple& t);

RealTriple to_real(const ExactTriple& t);

// Smallest field containing all three coordinates.
ExactTriple common_field(const ExactTriple& t);

// (-2cos(pi r1), -2cos(pi r2), -2cos(pi r3)) in the smallest common field.
ExactTriple triple_from_angles(const Rational& r1, const Rational& r2, const Rational& r3);

struct ExactTripleHash {
    std::size_t operator()(const ExactTriple& t) const;
};

struct ExactTripleEq {
    bool operator()(const ExactTriple& a, const ExactTriple& b) const {
        return a(0) == b(0) && a(1) == b(1) && a(2) == b(2);
    }
};

struct MuClass {
    FieldElement sin_sq_pi_mu;              // Q/4
    std::optional<double> representative_mu; // in [0, 1/2] when Q/4 in [0, 1]
};

MuClass mu_from_triple(const ExactTriple& t);

// True when sin^2(pi*mu) equals Q/4 exactly, mu = p/q.
bool mu_matches(const ExactTriple& t, long p, long q);

struct Orbit {
    std::vector<ExactTriple> classes; // canonical representatives in BFS order
    std::size_t size() const { return classes.size(); }
    std::size_t index_of(const ExactTriple& t) const; // npos if absent
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

struct BudgetExceededError : BudgetExceeded {
    BudgetExceededError(std::size_t partial)
        : BudgetExceeded("orbit exceeds budget after " + std::to_string(partial) + " classes"),
          partial_count(partial) {}
    std::size_t partial_count;
};

constexpr std::size_t kDefaultOrbitBudget = 100000;

std::vector<BraidWord> group_generators(BraidGroup g);

Orbit orbit_enumerate(const ExactTriple& seed, BraidGroup group, std::size_t budget = kDefaultOrbitBudget);

// Splits a full orbit into orbits of the given subgroup.
std::vector<Orbit> split_orbit(const Orbit& orbit, BraidGroup group);

struct EscapeResult {
    BraidWord word;          // includes the preliminary nonzero-making braid
    RealTriple image;
    int iterations = 0;      // applications of the smallest-coordinate rule
    double delta = 0.0;      // min{x_min^2, 2c} of the starting nonzero triple
    double sum_abs_start = 0.0;
};

EscapeResult escape_braid(const RealTriple& t, int max_iterations = 100000);

} // namespace pvi
