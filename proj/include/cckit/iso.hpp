#pragma once

#include <cstdint>
#include <vector>

#include "cckit/budget.hpp"
#include "cckit/builders.hpp"
#include "cckit/config.hpp"

namespace cckit {

// A bijection between the relation sets of two configurations preserving
// reflexivity, converse, valencies, and every intersection number.
struct AlgebraicMap {
    std::vector<int> phi; // source relation -> target relation
};

// All color-preserving permutations, by backtracking over points with
// partial-coloring pruning. Returns the group with a reduced generating set.
PermGroup automorphism_group(const CoherentConfiguration& x,
                             const Budget& budget = Budget::defaults());

// All bijections f with color(f(a), f(b)) constant over each source color,
// i.e. isomorphisms onto the target (enumerated per inducible relation map).
std::vector<std::vector<int>> isomorphisms(const CoherentConfiguration& x,
                                           const CoherentConfiguration& y,
                                           const Budget& budget = Budget::defaults());
std::int64_t isomorphism_count(const CoherentConfiguration& x, const CoherentConfiguration& y,
                               const Budget& budget = Budget::defaults());

// All relation bijections preserving the full intersection tensor.
std::vector<AlgebraicMap> algebraic_isomorphisms(const CoherentConfiguration& x,
                                                 const CoherentConfiguration& y,
                                                 const Budget& budget = Budget::defaults());

// Checks |iso(X,X)| / |aut(X)| == |aiso(X,X)|, i.e. that every algebraic
// automorphism is induced by an isomorphism. Carries the three cardinalities.
struct WitnessReport {
    std::int64_t iso_count = 0;
    std::int64_t aut_order = 0;
    std::int64_t aiso_count = 0;
    bool ok = false;
};
WitnessReport separability_witness(const CoherentConfiguration& x,
                                   const Budget& budget = Budget::defaults());

// True iff the orbits of aut(X) on point pairs coincide with the basis
// relations. Decided by transporter searches per relation, so large
// automorphism groups are fine.
bool is_schurian(const CoherentConfiguration& x, const Budget& budget = Budget::defaults());

// First isomorphism inducing the given relation map, if any.
bool has_inducing_isomorphism(const CoherentConfiguration& x, const CoherentConfiguration& y,
                              const AlgebraicMap& map, const Budget& budget = Budget::defaults());

} // namespace cckit
