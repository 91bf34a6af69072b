#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cckit/budget.hpp"
#include "cckit/config.hpp"

namespace cckit {

// A raw pair coloring, not yet coherent. Labels are arbitrary; the closure
// normalizes them and pre-splits diagonal from off-diagonal cells.
struct PairColoring {
    int n = 0;
    std::vector<std::int64_t> color; // n*n row-major

    std::int64_t& at(int a, int b) { return color[static_cast<std::size_t>(a) * n + b]; }
    std::int64_t at(int a, int b) const { return color[static_cast<std::size_t>(a) * n + b]; }

    static PairColoring filled(int n, std::int64_t value);
};

// Coarsest coherent configuration refining the given coloring (every input
// color class is a union of output basis relations). Iterated recoloring:
// the new color of a pair is its old color together with the sorted multiset
// over g of (color(a,g), color(g,b)); colors are renumbered by first
// occurrence each round and canonically at the fixpoint. Idempotent on
// already-coherent colorings.
CoherentConfiguration coherent_closure(const PairColoring& coloring,
                                       const Budget& budget = Budget::defaults());

// Minimal fission of x with {(alpha,alpha)} a basis relation.
CoherentConfiguration point_extension(const CoherentConfiguration& x, int alpha,
                                      const Budget& budget = Budget::defaults());

// True iff every basis relation of x is a union of basis relations of y.
// When true, the valency and indistinguishing maxima of y are checked to be
// bounded by those of x (a theorem; violation indicates a broken input).
bool is_fission(const CoherentConfiguration& y, const CoherentConfiguration& x);

// Configuration on Omega^2: closure of the tensor-square coloring with the
// diagonal {(a,a)} pre-split. Only m = 2 is supported; the degree n must not
// exceed budget.max_extension_degree.
CoherentConfiguration m_extension(const CoherentConfiguration& x, int m,
                                  const Budget& budget = Budget::defaults());

// Closure of the coloring {diagonal, arcs, remaining off-diagonal cells}.
// Arcs must be irreflexive.
CoherentConfiguration graph_closure(const std::vector<std::pair<int, int>>& arcs, int n,
                                    const Budget& budget = Budget::defaults());

} // namespace cckit
