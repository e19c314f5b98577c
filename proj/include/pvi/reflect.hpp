#pragma once

// Rank-3 reflection groups attached to a triple.

#include <Eigen/Core>

#include <array>
#include <optional>
#include <string>

#include "pvi/exactnum.hpp"
#include "pvi/triples.hpp"

namespace pvi {

template <class Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

using Matrix3F = Matrix3<FieldElement>;

// Symmetric form with diagonal 2 and g12 = x1, g13 = x3, g23 = x2.
template <class Scalar>
Matrix3<Scalar> gram(const Triple<Scalar>& t) {
    Matrix3<Scalar> g;
    g << Scalar(2), t(0), t(2),
         t(0), Scalar(2), t(1),
         t(2), t(1), Scalar(2);
    return g;
}

FieldElement gram_determinant(const Matrix3F& g);

// Q = 4 makes the form degenerate.
bool is_degenerate(const Matrix3F& g);

struct ReflectionSystem {
    std::array<Matrix3F, 3> r;
    Matrix3F roots; // columns: current roots in the original basis
    Matrix3F base_gram;

    // Gram matrix of the current roots.
    Matrix3F gram() const;
    // Triple read off the current Gram matrix.
    ExactTriple triple() const;
};

// R_i(x) = x - (e_i, x) e_i in the basis e1, e2, e3.
ReflectionSystem reflections(const ExactTriple& t);

// beta1: (R1, R2, R3) -> (R2, R2 R1 R2, R3); beta2: (R1, R2, R3) -> (R1, R3, R3 R2 R3).
ReflectionSystem braid_on_generators(const BraidWord& w, const ReflectionSystem& rs);

struct ClosureResult {
    std::size_t order = 0;
    std::string coxeter_type; // A3, B3, H3 or empty
};

constexpr std::size_t kDefaultClosureCap = 20000;

// Breadth-first closure with exact matrix equality; CapExceeded beyond cap.
ClosureResult group_closure(const ReflectionSystem& rs, std::size_t cap = kDefaultClosureCap);

// Sylvester criterion on the exact leading minors.
bool is_positive_definite(const Matrix3F& g);
bool is_positive_definite(const Matrix3<double>& g);

// n with x = -2cos(pi m/n), gcd(m, n) = 1, found among n <= bound.
std::optional<int> coxeter_exponent(const FieldElement& x, int bound = 60);

// Order of R_i R_j for each pair (1,2), (2,3), (1,3); empty when not finite.
std::array<std::optional<int>, 3> coxeter_relations(const ReflectionSystem& rs, int bound = 60);

bool is_identity(const Matrix3F& m);

} // namespace pvi
