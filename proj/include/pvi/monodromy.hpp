#pragma once

// 2x2 monodromy matrices of a triple and the trace identities they satisfy.

#include <Eigen/Core>

#include <complex>

#include "pvi/triples.hpp"

namespace pvi {

using Matrix2c = Eigen::Matrix2cd;
using ComplexTriple = Triple<std::complex<double>>;

struct CanonicalMatrices {
    Matrix2c m1, m2, m3;
    // The matrices realize (x_{1+s}, x_{2+s}, x_{3+s}) (indices mod 3) for this cyclic shift s.
    int shift = 0;
};

// M1 = [[1,-x1],[0,1]], M2 = [[1,0],[x1,1]], M3 = [[1 + x2x3/x1, -x2^2/x1],[x3^2/x1, 1 - x2x3/x1]].
// With x1 = 0 the coordinates are cyclically shifted when allowed, otherwise ZeroPivot.
CanonicalMatrices canonical_matrices(const RealTriple& t, bool allow_shift = false);
CanonicalMatrices canonical_matrices(const ComplexTriple& t, bool allow_shift = false);

// Triple class from Tr(M1M2) = 2 - x1^2, Tr(M3M2) = 2 - x2^2, Tr(M1M3) = 2 - x3^2 and
// Tr(M3M2M1) = 2 - Q. Inconsistent when the inputs are not unipotent monodromy matrices.
ComplexTriple triple_from_matrices(const Matrix2c& m1, const Matrix2c& m2, const Matrix2c& m3, double tol = 1e-10);

// Real representative of a class whose coordinates are real within tol.
RealTriple real_part_checked(const ComplexTriple& t, double tol = 1e-8);

struct MInfinityReport {
    bool ok = false;
    std::complex<double> trace;
    std::complex<double> expected_trace; // 2cos(2 pi mu)
    std::complex<double> eigen1, eigen2;
    double max_error = 0.0;
};

// M_inf = (M3 M2 M1)^-1; checks its trace and eigenvalues exp(+-2 pi i mu).
MInfinityReport m_infinity_check(const Matrix2c& m1, const Matrix2c& m2, const Matrix2c& m3, double mu,
                                 double tol = 1e-10);

} // namespace pvi
