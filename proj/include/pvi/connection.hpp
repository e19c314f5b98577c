#pragma once

// Critical behaviour at 0, 1, infinity and its relation to monodromy data.
//
// Triples here are named (x0, x1, x_inf) with x0 = Tr-coordinate of M0 Mx,
// x1 of Mx M1 and x_inf of M0 M1; as a Triple they are stored in that order.

#include <complex>

#include "pvi/monodromy.hpp"

namespace pvi {

using Complex = std::complex<double>;

enum class CriticalPoint { Zero, One, Infinity };

std::string point_name(CriticalPoint p);

struct AsymptoticDatum {
    CriticalPoint point = CriticalPoint::Zero;
    double sigma = 0.0; // exponent in [0, 1)
    double l = 1.0;     // index, 1 - sigma
    Complex a;          // leading coefficient
};

// Gamma function on the complex plane (Lanczos with reflection).
Complex complex_gamma(Complex z);

// l = arccos(cos 2 pi r) / pi.
Rational index_from_angle(const Rational& r);

// sigma0 = (2/pi) asin(|x0|/2).
double sigma_from_x0(double x0);

// Gamma-ratio G(l, mu) entering the leading coefficient at a point of index l.
Complex gamma_ratio(double l, double mu);

AsymptoticDatum coefficient_at(CriticalPoint point, const RealTriple& t, double mu);

struct MonodromyTriple {
    Matrix2c m0, mx, m1;
    Complex s;   // normalization parameter actually used
    Complex r;   // free parameter
};

// Closed-form monodromy matrices for the datum (sigma0, a0) at 0. sigma0 = 0 uses s = a0.
MonodromyTriple monodromy_from_asymptotics(double sigma0, double mu, Complex a0, Complex r_free = 1.0);

// Class of (x0, x1, x_inf) for the datum (sigma0, a0) at 0; checked against
// x0^2 + x1^2 + x_inf^2 - x0 x1 x_inf = 4 sin^2(pi mu).
ComplexTriple triple_from_asymptotics(Complex a0, double sigma0, double mu, double tol = 1e-8);

// Same class read off the matrices of monodromy_from_asymptotics.
ComplexTriple triple_via_matrices(Complex a0, double sigma0, double mu);

// True when the two complex triples are in the same two-sign class.
bool same_class(const ComplexTriple& a, const ComplexTriple& b, double tol);

} // namespace pvi
