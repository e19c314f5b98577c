#include "pvi/monodromy.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>

namespace pvi {

namespace {

using cd = std::complex<double>;

CanonicalMatrices build(const ComplexTriple& t, bool allow_shift) {
    CanonicalMatrices cm;
    ComplexTriple s = t;
    while (s(0) == cd(0.0)) {
        if (!allow_shift) throw ZeroPivot("x1 = 0");
        if (++cm.shift == 3) throw ZeroPivot("all coordinates vanish");
        s = ComplexTriple(t((cm.shift) % 3), t((cm.shift + 1) % 3), t((cm.shift + 2) % 3));
    }
    const cd x1 = s(0), x2 = s(1), x3 = s(2);
    cm.m1 << 1.0, -x1, 0.0, 1.0;
    cm.m2 << 1.0, 0.0, x1, 1.0;
    cm.m3 << 1.0 + x2 * x3 / x1, -x2 * x2 / x1, x3 * x3 / x1, 1.0 - x2 * x3 / x1;
    return cm;
}

double rel(cd a, cd b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

} // namespace

CanonicalMatrices canonical_matrices(const RealTriple& t, bool allow_shift) {
    return build(t.cast<cd>(), allow_shift);
}

CanonicalMatrices canonical_matrices(const ComplexTriple& t, bool allow_shift) { return build(t, allow_shift); }

ComplexTriple triple_from_matrices(const Matrix2c& m1, const Matrix2c& m2, const Matrix2c& m3, double tol) {
    for (const Matrix2c* m : {&m1, &m2, &m3}) {
        if (rel(m->determinant(), 1.0) > tol || rel(m->trace(), 2.0) > tol)
            throw Inconsistent("matrix is not unipotent with det 1 and trace 2");
    }
    // squares at rounding level are exact zeros; their square roots would not be
    auto clean = [](cd v) { return std::abs(v) < 1e-12 ? cd(0.0) : v; };
    const cd s1 = clean(2.0 - (m1 * m2).trace());
    const cd s2 = clean(2.0 - (m3 * m2).trace());
    const cd s3 = clean(2.0 - (m1 * m3).trace());
    const cd q = 2.0 - (m3 * m2 * m1).trace();
    const cd prod = s1 + s2 + s3 - q; // x1 x2 x3
    if (std::abs(prod * prod - s1 * s2 * s3) > tol * std::max(1.0, std::abs(s1 * s2 * s3)) * 1e2)
        throw Inconsistent("product of coordinates does not match the traces");
    ComplexTriple x(std::sqrt(s1), std::sqrt(s2), std::sqrt(s3));
    const cd p = x(0) * x(1) * x(2);
    if (std::abs(p) > 1e-12 && std::abs(p + prod) < std::abs(p - prod)) {
        // flip one nonzero coordinate
        int k = 0;
        for (int i = 0; i < 3; ++i)
            if (std::abs(x(i)) > std::abs(x(k))) k = i;
        x(k) = -x(k);
    }
    return x;
}

RealTriple real_part_checked(const ComplexTriple& t, double tol) {
    for (int i = 0; i < 3; ++i)
        if (std::abs(t(i).imag()) > tol * std::max(1.0, std::abs(t(i))))
            throw Inconsistent("coordinate " + std::to_string(i + 1) + " is not real");
    return RealTriple(t(0).real(), t(1).real(), t(2).real());
}

MInfinityReport m_infinity_check(const Matrix2c& m1, const Matrix2c& m2, const Matrix2c& m3, double mu, double tol) {
    MInfinityReport r;
    const Matrix2c minf = (m3 * m2 * m1).inverse();
    r.trace = minf.trace();
    r.expected_trace = 2.0 * std::cos(2.0 * M_PI * mu);
    const cd disc = std::sqrt(r.trace * r.trace - 4.0 * minf.determinant());
    r.eigen1 = (r.trace + disc) / 2.0;
    r.eigen2 = (r.trace - disc) / 2.0;
    const cd e = std::exp(cd(0.0, 2.0 * M_PI * mu));
    const double d_direct = std::max(std::abs(r.eigen1 - e), std::abs(r.eigen2 - 1.0 / e));
    const double d_swap = std::max(std::abs(r.eigen1 - 1.0 / e), std::abs(r.eigen2 - e));
    r.max_error = std::max(rel(r.trace, r.expected_trace), std::min(d_direct, d_swap));
    r.ok = r.max_error <= tol;
    return r;
}

} // namespace pvi
