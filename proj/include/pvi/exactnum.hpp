#pragma once

// Exact arithmetic in the real cyclotomic fields Q(2cos(pi/n)).

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstddef>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "pvi/errors.hpp"

namespace pvi {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

using IntPoly = std::vector<BigInt>; // coefficients, lowest degree first

// Context for Q(zeta), zeta = 2cos(pi/n). Immutable once built.
class FieldContext {
public:
    int n() const { return n_; }
    int degree() const { return degree_; }
    const IntPoly& minimal_polynomial() const { return minpoly_; }
    double zeta() const { return zeta_; }

    // z^k reduced modulo the minimal polynomial, for 0 <= k < power_count().
    const IntPoly& power(int k) const { return powers_[static_cast<std::size_t>(k)]; }
    int power_count() const { return static_cast<int>(powers_.size()); }

private:
    friend std::shared_ptr<const FieldContext> field_new(int n);
    int n_ = 1;
    int degree_ = 1;
    double zeta_ = -2.0;
    IntPoly minpoly_;
    std::vector<IntPoly> powers_;
};

using ContextPtr = std::shared_ptr<const FieldContext>;

// Contexts are interned: the same n always returns the same pointer.
ContextPtr field_new(int n);

// Context for lcm(a.n, b.n); both fields embed into it.
ContextPtr compound_context(const ContextPtr& a, const ContextPtr& b);

// Minimal polynomial of 2cos(pi/n) over the integers.
IntPoly cos_minimal_polynomial(int n);

// 2*T_k(z/2), the monic Chebyshev polynomial of degree k.
IntPoly chebyshev_c(int k);

class FieldElement {
public:
    FieldElement() : c_{Rational(0)} {}
    FieldElement(int v) : c_{Rational(v)} {}
    FieldElement(long v) : c_{Rational(v)} {}
    FieldElement(long long v) : c_{Rational(v)} {}
    FieldElement(const Rational& v) : c_{v} {}
    FieldElement(ContextPtr ctx, std::vector<Rational> coeffs);

    static FieldElement zeta(const ContextPtr& ctx);
    static FieldElement constant(const ContextPtr& ctx, const Rational& v);

    // Null for context-free rational constants; those combine with any field.
    const ContextPtr& context() const { return ctx_; }
    int n() const { return ctx_ ? ctx_->n() : 1; }

    // Full coefficient vector of length degree (length 1 for constants).
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const; // requires is_rational()

    FieldElement lift(const ContextPtr& target) const;
    FieldElement inverse() const;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);
    FieldElement operator-() const;

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    double to_double() const;
    std::size_t hash() const;
    std::string to_string() const;

private:
    void align(FieldElement& o);
    ContextPtr ctx_;
    std::vector<Rational> c_;
};

// -2cos(pi p/q) inside ctx; q must divide ctx->n().
FieldElement elem_from_cos(long p, long q, const ContextPtr& ctx);

// Value at zeta = 2cos(pi/n), evaluated with `digits` significant decimals.
Real embed_real(const FieldElement& e, unsigned digits);

// Sign of a - b in the real embedding; exact zero detection first.
int real_compare(const FieldElement& a, const FieldElement& b);

inline std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.to_string(); }

inline double to_double(const FieldElement& e) { return e.to_double(); }
inline double to_double(double v) { return v; }

// Ring helpers that also accept plain doubles, so templated code can use either.
inline bool is_exact_zero(const FieldElement& e) { return e.is_zero(); }
inline bool is_exact_zero(double v) { return v == 0.0; }

struct FieldElementHash {
    std::size_t operator()(const FieldElement& e) const { return e.hash(); }
};

} // namespace pvi

namespace Eigen {
template <>
struct NumTraits<pvi::FieldElement> : GenericNumTraits<pvi::FieldElement> {
    using Real = pvi::FieldElement;
    using NonInteger = pvi::FieldElement;
    using Nested = pvi::FieldElement;
    using Literal = pvi::FieldElement;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 16,
        MulCost = 64
    };
    static inline pvi::FieldElement epsilon() { return pvi::FieldElement(0); }
    static inline pvi::FieldElement dummy_precision() { return pvi::FieldElement(0); }
    static inline int digits10() { return 0; }
};
} // namespace Eigen
