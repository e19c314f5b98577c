#pragma once

// Rational solutions of cos 2pi phi1 + ... + cos 2pi phi4 = 0, angle steps and
// identification of finite braid orbits.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pvi/exactnum.hpp"
#include "pvi/triples.hpp"

namespace pvi {

using AngleTriple = std::array<Rational, 3>;

// Stored normalized: each phi mapped to min(phi, 1 - phi), sorted ascending.
struct CosQuadruple {
    std::array<Rational, 4> phi;

    static CosQuadruple normalized(std::array<Rational, 4> raw);
    // Image under phi -> phi + 1/2 applied to all four (negates every cosine).
    CosQuadruple global_flip() const;
    std::string to_string() const;
    bool operator==(const CosQuadruple& o) const { return phi == o.phi; }
    bool operator<(const CosQuadruple& o) const { return phi < o.phi; }
};

enum class Family { A, B, C, D1, D2, D3, E1, E2, E3, F, None };

std::string family_name(Family f);

struct FamilyMatch {
    Family family = Family::None;
    // For unmatched solutions: the family whose global flip image this is.
    std::optional<Family> flip_of;
};

// Exact check of the vanishing cosine sum; field degree is capped.
bool verify_cos_sum(const CosQuadruple& q, int degree_cap = 96);

FamilyMatch match_quadruple_family(const CosQuadruple& q);

struct TrigSearchResult {
    std::vector<CosQuadruple> solutions; // sorted, deduplicated
    std::size_t candidates_checked = 0;
    int max_field_degree = 0;
};

TrigSearchResult trig_quadruple_search(int max_denominator, int degree_cap = 96);

// The three sporadic solutions (a), (b), (c) in normalized form.
std::vector<std::pair<Family, CosQuadruple>> sporadic_quadruples();

// Step cos(pi r'_k) = cos(pi r_k) + 2cos(pi r_i)cos(pi r_j); returns the triple with
// r_i -> 1 - r_i and r_k -> r'_k. Indices are 0-based.
AngleTriple braid_angle_step(const AngleTriple& angles, int i, int j, int k, int denominator_bound = 240);

enum class OrbitType { Tetrahedron, Cube, Icosahedron, GreatIcosahedron, GreatDodecahedron, Infinite, Resonant, Unclassified };

std::string orbit_type_name(OrbitType t);

struct KnownOrbit {
    OrbitType type;
    std::string label;      // cl1 .. cl5
    ExactTriple seed;
    Rational mu;            // value used with the algebraic solution
    Orbit orbit;
};

// The five finite orbits, built once from their seeds.
const std::vector<KnownOrbit>& known_orbits();

struct Classification {
    OrbitType type = OrbitType::Unclassified;
    std::size_t orbit_size = 0;
    std::optional<std::size_t> known_index;
};

Classification classify_triple(const ExactTriple& t, std::size_t budget = 5000);

} // namespace pvi
