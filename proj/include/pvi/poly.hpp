#pragma once

// Dense univariate polynomials with exact integer or rational coefficients,
// lowest degree first.

#include <vector>

#include "pvi/exactnum.hpp"

namespace pvi {

using RatPoly = std::vector<Rational>;

IntPoly poly_from(std::initializer_list<long long> c);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_pow(const IntPoly& a, int k);
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_derivative(const IntPoly& a);
IntPoly poly_product(std::initializer_list<IntPoly> factors);
int poly_degree(const IntPoly& a);

RatPoly to_rat(const IntPoly& a);
RatPoly rat_trim(RatPoly a);
RatPoly rat_derivative(const RatPoly& a);
RatPoly rat_gcd(RatPoly a, RatPoly b); // monic
RatPoly rat_div(const RatPoly& a, const RatPoly& b); // exact quotient

// Squarefree decomposition: factors f_k with a = c * prod f_k^k (Yun).
std::vector<std::pair<RatPoly, int>> squarefree(const RatPoly& a);

template <class T>
T poly_eval(const IntPoly& p, const T& s) {
    T acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * s + T(it->str().c_str());
    return acc;
}

template <class T>
T poly_eval(const RatPoly& p, const T& s) {
    T acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        const T num(boost::multiprecision::numerator(*it).str().c_str());
        const T den(boost::multiprecision::denominator(*it).str().c_str());
        acc = acc * s + num / den;
    }
    return acc;
}

} // namespace pvi
