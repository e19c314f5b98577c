#include "pvi/exactnum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace pvi {

namespace {

void trim(IntPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Exact division by a monic polynomial; throws if the remainder is nonzero.
IntPoly poly_divexact(IntPoly a, const IntPoly& m) {
    const std::size_t dm = m.size() - 1;
    if (a.size() < m.size()) throw Error("Internal", "polynomial division degree");
    IntPoly q(a.size() - dm, BigInt(0));
    for (std::size_t k = a.size(); k-- > dm;) {
        BigInt c = a[k];
        q[k - dm] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dm; ++j) a[k - dm + j] -= c * m[j];
    }
    for (std::size_t j = 0; j < dm; ++j)
        if (a[j] != 0) throw Error("Internal", "inexact polynomial division");
    return q;
}

// Square root of a monic perfect square.
IntPoly poly_sqrt(const IntPoly& p) {
    const std::size_t deg = p.size() - 1;
    if (deg % 2 != 0 || p.back() != 1) throw Error("Internal", "not a monic square");
    const std::size_t d = deg / 2;
    IntPoly r(d + 1, BigInt(0));
    r[d] = 1;
    for (std::size_t k = 1; k <= d; ++k) {
        // coefficient of z^(deg-k) in r^2 determines r[d-k]
        BigInt s = 0;
        for (std::size_t i = 1; i < k; ++i) s += r[d - i] * r[d - (k - i)];
        BigInt target = p[deg - k] - s;
        if (target % 2 != 0) throw Error("Internal", "not a square");
        r[d - k] = target / 2;
    }
    if (poly_mul(r, r) != p) throw Error("Internal", "not a square");
    return r;
}

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<int, ContextPtr>& registry() {
    static std::map<int, ContextPtr> r;
    return r;
}

std::map<int, IntPoly>& minpoly_cache() {
    static std::map<int, IntPoly> c;
    return c;
}

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_big(const BigInt& z) {
    const auto* d = z.backend().data();
    std::size_t h = static_cast<std::size_t>(d[0]._mp_size);
    const int limbs = std::abs(d[0]._mp_size);
    for (int i = 0; i < limbs; ++i) h = mix(h, static_cast<std::size_t>(d[0]._mp_d[i]));
    return h;
}

Real to_real(const Rational& q) {
    return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
}

class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits) : saved_(Real::default_precision()) {
        Real::default_precision(digits);
    }
    ~PrecisionGuard() { Real::default_precision(saved_); }

private:
    unsigned saved_;
};

} // namespace

IntPoly chebyshev_c(int k) {
    // C_0 = 2, C_1 = z, C_{j+1} = z C_j - C_{j-1}
    IntPoly prev{BigInt(2)};
    if (k == 0) return prev;
    IntPoly cur{BigInt(0), BigInt(1)};
    for (int j = 1; j < k; ++j) {
        IntPoly next(cur.size() + 1, BigInt(0));
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        trim(next);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly cos_minimal_polynomial(int n) {
    if (n < 1) throw InvalidArgument("n must be positive");
    {
        std::lock_guard<std::mutex> lock(registry_mutex());
        auto it = minpoly_cache().find(n);
        if (it != minpoly_cache().end()) return it->second;
    }
    IntPoly result;
    if (n == 1) {
        result = {BigInt(2), BigInt(1)};
    } else {
        // 2T_n(z/2)+2 = (z+2)^[n odd] * prod_{m|n, n/m odd, m>1} psi_m^2
        IntPoly p = chebyshev_c(n);
        p[0] += 2;
        if (n % 2 == 1) p = poly_divexact(p, cos_minimal_polynomial(1));
        for (int m = 2; m < n; ++m) {
            if (n % m != 0 || (n / m) % 2 == 0) continue;
            IntPoly psi = cos_minimal_polynomial(m);
            p = poly_divexact(p, poly_mul(psi, psi));
        }
        result = poly_sqrt(p);
    }
    std::lock_guard<std::mutex> lock(registry_mutex());
    minpoly_cache()[n] = result;
    return result;
}

ContextPtr field_new(int n) {
    if (n < 1) throw InvalidArgument("field_new requires n >= 1");
    {
        std::lock_guard<std::mutex> lock(registry_mutex());
        auto it = registry().find(n);
        if (it != registry().end()) return it->second;
    }
    auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
    ctx->n_ = n;
    ctx->minpoly_ = cos_minimal_polynomial(n);
    ctx->degree_ = static_cast<int>(ctx->minpoly_.size()) - 1;
    ctx->zeta_ = 2.0 * std::cos(M_PI / n);
    const int d = ctx->degree_;
    const int count = std::max(2, 2 * d - 1);
    ctx->powers_.resize(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        IntPoly v(static_cast<std::size_t>(d), BigInt(0));
        if (k < d) {
            v[static_cast<std::size_t>(k)] = 1;
        } else {
            // z * z^(k-1), then replace z^d by -(m_0 + ... + m_{d-1} z^{d-1})
            const IntPoly& prev = ctx->powers_[static_cast<std::size_t>(k - 1)];
            BigInt top = prev[static_cast<std::size_t>(d - 1)];
            for (int j = d - 1; j >= 1; --j) v[static_cast<std::size_t>(j)] = prev[static_cast<std::size_t>(j - 1)];
            v[0] = 0;
            for (int j = 0; j < d; ++j) v[static_cast<std::size_t>(j)] -= top * ctx->minpoly_[static_cast<std::size_t>(j)];
        }
        ctx->powers_[static_cast<std::size_t>(k)] = std::move(v);
    }
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto [it, inserted] = registry().emplace(n, ctx);
    return it->second;
}

ContextPtr compound_context(const ContextPtr& a, const ContextPtr& b) {
    const int na = a ? a->n() : 1;
    const int nb = b ? b->n() : 1;
    return field_new(std::lcm(na, nb));
}

FieldElement::FieldElement(ContextPtr ctx, std::vector<Rational> coeffs) : ctx_(std::move(ctx)) {
    if (!ctx_) {
        if (coeffs.size() > 1) throw InvalidArgument("context-free element must be rational");
        c_ = coeffs.empty() ? std::vector<Rational>{Rational(0)} : std::move(coeffs);
        return;
    }
    const std::size_t d = static_cast<std::size_t>(ctx_->degree());
    c_.assign(d, Rational(0));
    if (static_cast<int>(coeffs.size()) > ctx_->power_count()) {
        // Horner in zeta; multiplying by zeta is a shift plus one reduction
        const IntPoly& m = ctx_->minimal_polynomial();
        for (std::size_t k = coeffs.size(); k-- > 0;) {
            Rational top = c_[d - 1];
            for (std::size_t j = d - 1; j >= 1; --j) c_[j] = c_[j - 1];
            c_[0] = 0;
            if (top != 0)
                for (std::size_t j = 0; j < d; ++j) c_[j] -= top * Rational(m[j]);
            c_[0] += coeffs[k];
        }
        return;
    }
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        if (k < d) {
            c_[k] += coeffs[k];
        } else {
            const IntPoly& p = ctx_->power(static_cast<int>(k));
            for (std::size_t j = 0; j < d; ++j)
                if (p[j] != 0) c_[j] += coeffs[k] * Rational(p[j]);
        }
    }
}

FieldElement FieldElement::zeta(const ContextPtr& ctx) {
    return FieldElement(ctx, {Rational(0), Rational(1)});
}

FieldElement FieldElement::constant(const ContextPtr& ctx, const Rational& v) {
    return FieldElement(ctx, std::vector<Rational>{v});
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool FieldElement::is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
}

Rational FieldElement::rational_value() const {
    if (!is_rational()) throw InvalidArgument("element is irrational");
    return c_[0];
}

void FieldElement::align(FieldElement& o) {
    if (ctx_ == o.ctx_) return;
    if (!o.ctx_) {
        o = constant(ctx_, o.c_[0]);
        return;
    }
    if (!ctx_) {
        *this = constant(o.ctx_, c_[0]);
        return;
    }
    throw ContextMismatch("elements from Q(2cos pi/" + std::to_string(ctx_->n()) + ") and Q(2cos pi/" +
                          std::to_string(o.ctx_->n()) + ")");
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    FieldElement b = o;
    align(b);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    FieldElement b = o;
    align(b);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    if (!o.ctx_ || !ctx_) {
        if (!o.ctx_ && !ctx_) {
            c_[0] *= o.c_[0];
            return *this;
        }
        const Rational& k = !o.ctx_ ? o.c_[0] : c_[0];
        std::vector<Rational> v = !o.ctx_ ? c_ : o.c_;
        for (auto& q : v) q *= k;
        ctx_ = ctx_ ? ctx_ : o.ctx_;
        c_ = std::move(v);
        return *this;
    }
    if (ctx_ != o.ctx_) {
        FieldElement b = o;
        align(b);
    }
    const std::size_t d = c_.size();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    std::vector<Rational> r(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d));
    for (std::size_t k = d; k < prod.size(); ++k) {
        if (prod[k] == 0) continue;
        const IntPoly& p = ctx_->power(static_cast<int>(k));
        for (std::size_t j = 0; j < d; ++j)
            if (p[j] != 0) r[j] += prod[k] * Rational(p[j]);
    }
    c_ = std::move(r);
    return *this;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero field element");
    if (!ctx_ || ctx_->degree() == 1) {
        FieldElement r = *this;
        r.c_[0] = Rational(1) / c_[0];
        return r;
    }
    // Solve (multiplication-by-this matrix) * v = e_0 over Q.
    const std::size_t d = c_.size();
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1, Rational(0)));
    FieldElement basis = constant(ctx_, Rational(1));
    const FieldElement z = zeta(ctx_);
    for (std::size_t j = 0; j < d; ++j) {
        FieldElement col = *this * basis;
        for (std::size_t i = 0; i < d; ++i) a[i][j] = col.c_[i];
        basis *= z;
    }
    a[0][d] = 1;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && a[piv][col] == 0) ++piv;
        if (piv == d) throw DivisionByZero("singular multiplication matrix");
        std::swap(a[piv], a[col]);
        for (std::size_t i = 0; i < d; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational f = a[i][col] / a[col][col];
            for (std::size_t k = col; k <= d; ++k) a[i][k] -= f * a[col][k];
        }
    }
    std::vector<Rational> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = a[i][d] / a[i][i];
    return FieldElement(ctx_, std::move(v));
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.ctx_ == b.ctx_) return a.c_ == b.c_;
    const bool ra = a.is_rational(), rb = b.is_rational();
    if (ra && rb) return a.c_[0] == b.c_[0];
    if (ra != rb && (!a.ctx_ || !b.ctx_)) return false;
    // different fields: compare inside the compound field
    ContextPtr ctx = compound_context(a.ctx_, b.ctx_);
    return a.lift(ctx).c_ == b.lift(ctx).c_;
}

FieldElement FieldElement::lift(const ContextPtr& target) const {
    if (!ctx_) return constant(target, c_[0]);
    if (ctx_ == target) return *this;
    if (is_rational()) return constant(target, c_[0]);
    if (target->n() % ctx_->n() != 0)
        throw IncompatibleField("cannot embed n=" + std::to_string(ctx_->n()) + " into n=" + std::to_string(target->n()));
    // 2cos(pi/m) = C_{n/m}(2cos(pi/n))
    const IntPoly ck = chebyshev_c(target->n() / ctx_->n());
    std::vector<Rational> ckq(ck.begin(), ck.end());
    FieldElement image(target, ckq);
    FieldElement r = constant(target, Rational(0));
    for (std::size_t k = c_.size(); k-- > 0;) {
        r *= image;
        r += constant(target, c_[k]);
    }
    return r;
}

Real embed_real(const FieldElement& e, unsigned digits) {
    PrecisionGuard guard(digits + 10);
    if (!e.context()) return to_real(e.coeffs()[0]);
    const int n = e.context()->n();
    Real zeta = 2 * boost::multiprecision::cos(boost::multiprecision::acos(Real(-1)) / n);
    Real r = 0;
    const auto& c = e.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) r = r * zeta + to_real(c[k]);
    return r;
}

double FieldElement::to_double() const {
    if (is_rational()) return static_cast<double>(c_[0]);
    return static_cast<double>(embed_real(*this, 40));
}

int real_compare(const FieldElement& a, const FieldElement& b) {
    FieldElement d = a - b;
    if (d.is_zero()) return 0;
    if (d.is_rational()) return d.coeffs()[0] > 0 ? 1 : -1;
    // nonzero, so enough precision always settles the sign
    for (unsigned digits = 30;; digits *= 3) {
        Real v = embed_real(d, digits);
        Real scale = 1;
        for (const auto& q : d.coeffs()) scale = std::max(scale, Real(boost::multiprecision::abs(to_real(q))));
        scale *= 1e3;
        Real eps = scale * boost::multiprecision::pow(Real(10), -static_cast<int>(digits));
        if (boost::multiprecision::abs(v) > eps) return v > 0 ? 1 : -1;
        if (digits > 100000) throw Error("Internal", "sign undecided");
    }
}

std::size_t FieldElement::hash() const {
    std::size_t h = is_rational() ? 1 : static_cast<std::size_t>(n());
    std::size_t last = c_.size();
    while (last > 1 && c_[last - 1] == 0) --last;
    for (std::size_t i = 0; i < last; ++i) {
        h = mix(h, hash_big(boost::multiprecision::numerator(c_[i])));
        h = mix(h, hash_big(boost::multiprecision::denominator(c_[i])));
    }
    return h;
}

std::string FieldElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[k] << ")";
        if (k == 1) os << "*z";
        if (k > 1) os << "*z^" << k;
    }
    if (first) os << "0";
    if (ctx_ && !is_rational()) os << " [z=2cos(pi/" << ctx_->n() << ")]";
    return os.str();
}

FieldElement elem_from_cos(long p, long q, const ContextPtr& ctx) {
    if (q <= 0) throw InvalidArgument("q must be positive");
    const long n = ctx->n();
    if (n % q != 0) throw IncompatibleField(std::to_string(q) + " does not divide " + std::to_string(n));
    // -2cos(pi p/q) = -C_k(zeta) with k = p n/q reduced to [0, n]
    long k = (p * (n / q)) % (2 * n);
    if (k < 0) k += 2 * n;
    if (k > n) k = 2 * n - k;
    const IntPoly ck = chebyshev_c(static_cast<int>(k));
    std::vector<Rational> v;
    v.reserve(ck.size());
    for (const auto& c : ck) v.emplace_back(-c);
    return FieldElement(ctx, std::move(v));
}

} // namespace pvi
