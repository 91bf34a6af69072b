#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cckit {

// A validated coherent configuration on n points: a partition of Omega x Omega
// into `rank` basis relations given by a dense color matrix, together with the
// derived structure (converse map, valencies, fibers). Immutable after
// validation; all query functions are pure.
struct CoherentConfiguration {
    int n = 0;
    int rank = 0;
    std::vector<int> colors;      // n*n row-major; entry (a,b) at a*n+b
    std::vector<int> converse;    // relation -> converse relation
    std::vector<char> reflexive;  // relation -> contained in the diagonal
    std::vector<std::int64_t> valency; // relation -> out-degree from its source fiber
    std::vector<int> fiber_of;    // point -> fiber id
    std::vector<std::vector<int>> fibers;
    std::vector<std::pair<int, int>> rep; // relation -> first pair in row-major order

    int color(int a, int b) const { return colors[static_cast<std::size_t>(a) * n + b]; }
    bool homogeneous() const { return fibers.size() == 1; }

    // Points beta with color(alpha, beta) == s.
    std::vector<int> neighbors(int alpha, int s) const;
};

// Sparse tensor of intersection numbers c_{rs}^t, nonzero entries only.
struct IntersectionTensor {
    int rank = 0;
    std::unordered_map<std::uint64_t, std::int64_t> entries;

    std::uint64_t key(int r, int s, int t) const {
        return (static_cast<std::uint64_t>(r) * rank + s) * rank + t;
    }
    std::int64_t get(int r, int s, int t) const {
        auto it = entries.find(key(r, s, t));
        return it == entries.end() ? 0 : it->second;
    }
};

// Validates a color matrix against the coherent-configuration axioms and
// computes the derived structure. Indices must form a contiguous range from
// 0. Throws ValidationError naming the first violated axiom with a witness.
CoherentConfiguration from_color_matrix(int n, std::vector<int> colors);

// c_{rs}^t computed from a single representative pair of t.
std::int64_t intersection_number(const CoherentConfiguration& x, int r, int s, int t);

// All nonzero c_{rs}^t.
IntersectionTensor full_tensor(const CoherentConfiguration& x);

// c(s) = sum_r c_{rr*}^s for an irreflexive relation s, and its maximum
// over all irreflexive relations.
std::int64_t indistinguishing_number(const CoherentConfiguration& x, int s);
std::int64_t max_indistinguishing(const CoherentConfiguration& x);

// Direct count of points gamma with color(gamma,alpha) == color(gamma,beta);
// used as an independent route to c(s).
std::int64_t indistinguishing_direct_count(const CoherentConfiguration& x, int alpha, int beta);

// {t : c_{rs}^t != 0}, sorted ascending.
std::vector<int> complex_product(const CoherentConfiguration& x, int r, int s);

// Restriction to Omega minus {alpha}; requires {alpha} to be a fiber.
// Relations are renumbered canonically on the remaining points.
CoherentConfiguration restrict_at_singleton(const CoherentConfiguration& x, int alpha);

std::int64_t max_valency(const CoherentConfiguration& x);
const std::vector<std::int64_t>& valencies(const CoherentConfiguration& x);

// Relabels colors into the canonical relation order: reflexive relations
// first (by least point), then irreflexive relations by least contained pair
// in row-major order. Returns the relabeled matrix.
std::vector<int> canonical_color_order(int n, const std::vector<int>& colors);

// Convenience: canonicalize then validate.
CoherentConfiguration from_color_matrix_canonical(int n, std::vector<int> colors);

// True when the two configurations induce the same partition of
// Omega x Omega (labels may differ).
bool same_partition(const CoherentConfiguration& a, const CoherentConfiguration& b);

// Standard small families.
CoherentConfiguration trivial_scheme(int n);
CoherentConfiguration discrete_configuration(int n);

} // namespace cckit
