#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cckit/budget.hpp"
#include "cckit/config.hpp"
#include "cckit/gf.hpp"

namespace cckit {

// A permutation group on {0..degree-1} given by generators, with the full
// element list enumerated at construction (orders here are tiny).
struct PermGroup {
    int degree = 0;
    std::vector<std::vector<int>> generators;
    std::vector<std::vector<int>> elements;
    std::int64_t order = 0;

    static PermGroup from_generators(int degree, std::vector<std::vector<int>> generators,
                                     const Budget& budget = Budget::defaults());
    static PermGroup symmetric(int degree, const Budget& budget = Budget::defaults());
    static PermGroup identity(int degree);
};

// Orbits of K on Omega x Omega as a coherent configuration (computed from
// the generators; the element list is not needed).
CoherentConfiguration orbital_config(const PermGroup& k);
CoherentConfiguration orbital_config(int degree, const std::vector<std::vector<int>>& generators);

// Scheme on the q field elements whose irreflexive classes are the
// difference cosets {(x,y) : y-x in Ma}. M must be a multiplicative
// subgroup, e.g. from multiplicative_subgroup().
CoherentConfiguration cyclotomic_scheme(const FiniteField& field,
                                        const std::vector<FieldElement>& m);

// Orbital configuration of the group generated by multiplication by a
// primitive element and the Frobenius map, acting on the q-1 nonzero field
// elements (point i is the nonzero element of index i+1).
CoherentConfiguration c_scheme(const FiniteField& field);

enum class PaleyKind { graph, tournament };

struct PaleyResult {
    FiniteField field;
    std::vector<std::pair<int, int>> arcs;
    CoherentConfiguration scheme;
};

// Paley graph (q = 1 mod 4) or tournament (q = 3 mod 4) on GF(q): arcs are
// the pairs whose difference is a nonzero square.
PaleyResult paley(std::int64_t q, PaleyKind kind);

// Splits a prime power as (p, d); throws if q is not a prime power.
std::pair<std::int64_t, std::int64_t> factor_prime_power(std::int64_t q);

} // namespace cckit
