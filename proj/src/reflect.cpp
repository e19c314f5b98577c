#include "pvi/reflect.hpp"

#include <Eigen/LU>

#include <cmath>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace pvi {

namespace {

Matrix3F mul(const Matrix3F& a, const Matrix3F& b) {
    Matrix3F c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    return c;
}

Matrix3F identity3() {
    Matrix3F m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = FieldElement(i == j ? 1 : 0);
    return m;
}

// Reflection along root e (coordinates in the original basis): x -> x - (e, x) e.
Matrix3F reflection_along(const Triple<FieldElement>& e, const Matrix3F& g) {
    Matrix3F m = identity3();
    Triple<FieldElement> ge;
    for (int j = 0; j < 3; ++j) ge(j) = e(0) * g(0, j) + e(1) * g(1, j) + e(2) * g(2, j);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) -= e(i) * ge(j);
    return m;
}

Triple<FieldElement> apply(const Matrix3F& m, const Triple<FieldElement>& v) {
    Triple<FieldElement> r;
    for (int i = 0; i < 3; ++i) r(i) = m(i, 0) * v(0) + m(i, 1) * v(1) + m(i, 2) * v(2);
    return r;
}

struct MatrixHash {
    std::size_t operator()(const Matrix3F& m) const {
        std::size_t h = 0;
        for (int i = 0; i < 9; ++i) h = h * 1000003u ^ m(i).hash();
        return h;
    }
};

struct MatrixEq {
    bool operator()(const Matrix3F& a, const Matrix3F& b) const {
        for (int i = 0; i < 9; ++i)
            if (a(i) != b(i)) return false;
        return true;
    }
};

} // namespace

FieldElement gram_determinant(const Matrix3F& g) {
    return g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1)) - g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0)) +
           g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0));
}

bool is_degenerate(const Matrix3F& g) { return gram_determinant(g).is_zero(); }

bool is_identity(const Matrix3F& m) { return MatrixEq{}(m, identity3()); }

Matrix3F ReflectionSystem::gram() const {
    Matrix3F g;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            FieldElement s(0);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) s += roots(a, i) * base_gram(a, b) * roots(b, j);
            g(i, j) = s;
        }
    return g;
}

ExactTriple ReflectionSystem::triple() const {
    const Matrix3F g = gram();
    return ExactTriple(g(0, 1), g(1, 2), g(0, 2));
}

ReflectionSystem reflections(const ExactTriple& t) {
    const ExactTriple c = common_field(t);
    ReflectionSystem rs;
    rs.base_gram = gram(c);
    rs.roots = identity3();
    for (int i = 0; i < 3; ++i) rs.r[static_cast<std::size_t>(i)] = reflection_along(rs.roots.col(i), rs.base_gram);
    return rs;
}

ReflectionSystem braid_on_generators(const BraidWord& w, const ReflectionSystem& rs) {
    ReflectionSystem out = rs;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        auto& R = out.r;
        Triple<FieldElement> e1 = out.roots.col(0), e2 = out.roots.col(1), e3 = out.roots.col(2);
        switch (*it) {
        case Gen::B1:
            out.roots.col(0) = e2;
            out.roots.col(1) = apply(R[1], e1);
            R = {R[1], mul(mul(R[1], R[0]), R[1]), R[2]};
            break;
        case Gen::B1inv:
            out.roots.col(0) = apply(R[0], e2);
            out.roots.col(1) = e1;
            R = {mul(mul(R[0], R[1]), R[0]), R[0], R[2]};
            break;
        case Gen::B2:
            out.roots.col(1) = e3;
            out.roots.col(2) = apply(R[2], e2);
            R = {R[0], R[2], mul(mul(R[2], R[1]), R[2])};
            break;
        case Gen::B2inv:
            out.roots.col(1) = apply(R[1], e3);
            out.roots.col(2) = e2;
            R = {R[0], mul(mul(R[1], R[2]), R[1]), R[1]};
            break;
        }
    }
    return out;
}

ClosureResult group_closure(const ReflectionSystem& rs, std::size_t cap) {
    std::unordered_set<Matrix3F, MatrixHash, MatrixEq> seen;
    std::deque<Matrix3F> frontier;
    const Matrix3F id = identity3();
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        Matrix3F cur = frontier.front();
        frontier.pop_front();
        for (const auto& g : rs.r) {
            Matrix3F next = mul(cur, g);
            if (seen.insert(next).second) {
                if (seen.size() > cap) throw CapExceeded("group has more than " + std::to_string(cap) + " elements");
                frontier.push_back(std::move(next));
            }
        }
    }
    ClosureResult res;
    res.order = seen.size();
    if (res.order == 24) res.coxeter_type = "A3";
    else if (res.order == 48) res.coxeter_type = "B3";
    else if (res.order == 120) res.coxeter_type = "H3";
    return res;
}

bool is_positive_definite(const Matrix3F& g) {
    const FieldElement m2 = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    return real_compare(g(0, 0), FieldElement(0)) > 0 && real_compare(m2, FieldElement(0)) > 0 &&
           real_compare(gram_determinant(g), FieldElement(0)) > 0;
}

bool is_positive_definite(const Matrix3<double>& g) {
    const double m2 = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    return g(0, 0) > 0.0 && m2 > 0.0 && g.determinant() > 0.0;
}

std::optional<int> coxeter_exponent(const FieldElement& x, int bound) {
    const double v = -x.to_double() / 2.0;
    if (std::abs(v) > 1.0 + 1e-12) return std::nullopt;
    const double r = std::acos(std::clamp(v, -1.0, 1.0)) / M_PI;
    for (int n = 1; n <= bound; ++n) {
        const long m = std::lround(r * n);
        if (std::gcd(m, static_cast<long>(n)) != 1 || std::abs(static_cast<double>(m) / n - r) > 1e-9) continue;
        ContextPtr ctx = compound_context(x.context(), field_new(n));
        if (elem_from_cos(m, n, ctx) == x) return n;
    }
    return std::nullopt;
}

std::array<std::optional<int>, 3> coxeter_relations(const ReflectionSystem& rs, int bound) {
    const std::pair<int, int> pairs[3] = {{0, 1}, {1, 2}, {0, 2}};
    std::array<std::optional<int>, 3> out;
    for (std::size_t p = 0; p < 3; ++p) {
        const Matrix3F prod = mul(rs.r[static_cast<std::size_t>(pairs[p].first)], rs.r[static_cast<std::size_t>(pairs[p].second)]);
        Matrix3F acc = prod;
        for (int k = 1; k <= bound; ++k) {
            if (is_identity(acc)) {
                out[p] = k;
                break;
            }
            acc = mul(acc, prod);
        }
    }
    return out;
}

} // namespace pvi
