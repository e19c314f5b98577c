#include "pvi/poly.hpp"

#include <algorithm>

namespace pvi {

IntPoly poly_from(std::initializer_list<long long> c) {
    IntPoly p;
    for (long long v : c) p.emplace_back(v);
    return p;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

IntPoly poly_pow(const IntPoly& a, int k) {
    IntPoly r{BigInt(1)};
    for (int i = 0; i < k; ++i) r = poly_mul(r, a);
    return r;
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    return r;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly nb = b;
    for (auto& c : nb) c = -c;
    return poly_add(a, nb);
}

IntPoly poly_derivative(const IntPoly& a) {
    if (a.size() <= 1) return {BigInt(0)};
    IntPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
    return r;
}

IntPoly poly_product(std::initializer_list<IntPoly> factors) {
    IntPoly r{BigInt(1)};
    for (const auto& f : factors) r = poly_mul(r, f);
    return r;
}

int poly_degree(const IntPoly& a) {
    int d = static_cast<int>(a.size()) - 1;
    while (d > 0 && a[static_cast<std::size_t>(d)] == 0) --d;
    return d;
}

RatPoly to_rat(const IntPoly& a) {
    RatPoly r;
    for (const auto& c : a) r.emplace_back(c);
    return rat_trim(r);
}

RatPoly rat_trim(RatPoly a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    if (a.empty()) a.emplace_back(0);
    return a;
}

RatPoly rat_derivative(const RatPoly& a) {
    if (a.size() <= 1) return {Rational(0)};
    RatPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
    return rat_trim(r);
}

namespace {

bool rat_is_zero(const RatPoly& a) { return a.size() == 1 && a[0] == 0; }

// Remainder and quotient of a by b.
std::pair<RatPoly, RatPoly> rat_divmod(RatPoly a, const RatPoly& b) {
    a = rat_trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() - 1 < db || rat_is_zero(a)) return {{Rational(0)}, a};
    RatPoly q(a.size() - db, Rational(0));
    for (std::size_t k = a.size() - 1 + 1; k-- > db;) {
        const Rational c = a[k] / b[db];
        q[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
    }
    a.resize(db == 0 ? 1 : db);
    return {rat_trim(q), rat_trim(a)};
}

RatPoly monic(RatPoly a) {
    a = rat_trim(a);
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

} // namespace

RatPoly rat_gcd(RatPoly a, RatPoly b) {
    a = rat_trim(a);
    b = rat_trim(b);
    while (!rat_is_zero(b)) {
        RatPoly r = rat_divmod(a, b).second;
        a = b;
        b = r;
    }
    return monic(a);
}

RatPoly rat_div(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = rat_divmod(a, rat_trim(b));
    if (!rat_is_zero(r)) throw Error("Internal", "inexact polynomial division");
    return q;
}

std::vector<std::pair<RatPoly, int>> squarefree(const RatPoly& a) {
    std::vector<std::pair<RatPoly, int>> out;
    RatPoly f = monic(a);
    if (f.size() <= 1) return out;
    RatPoly d = rat_derivative(f);
    RatPoly g = rat_gcd(f, d);
    RatPoly c = rat_div(f, g);
    RatPoly w = rat_div(d, g);
    RatPoly y = rat_trim([&] {
        RatPoly cd = rat_derivative(c);
        RatPoly r(std::max(w.size(), cd.size()), Rational(0));
        for (std::size_t i = 0; i < w.size(); ++i) r[i] += w[i];
        for (std::size_t i = 0; i < cd.size(); ++i) r[i] -= cd[i];
        return r;
    }());
    int k = 1;
    while (c.size() > 1) {
        RatPoly h = rat_gcd(c, y);
        if (h.size() > 1) out.emplace_back(h, k);
        c = rat_div(c, h);
        RatPoly yh = rat_div(y, h);
        RatPoly cd = rat_derivative(c);
        RatPoly r(std::max(yh.size(), cd.size()), Rational(0));
        for (std::size_t i = 0; i < yh.size(); ++i) r[i] += yh[i];
        for (std::size_t i = 0; i < cd.size(); ++i) r[i] -= cd[i];
        y = rat_trim(r);
        ++k;
    }
    return out;
}

} // namespace pvi
