#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cckit/builders.hpp"
#include "cckit/config.hpp"
#include "cckit/couples.hpp"

namespace cckit {

enum class Conclusion { separable_certified, fission_separable_certified, inconclusive };

std::string to_string(Conclusion c);

// Parameter analysis of one configuration: degree n, maximal valency k,
// indistinguishing number c, and the sufficient inequality n > 3c(k-1)k.
// When the inequality holds, every fission of the configuration (itself
// included) is separable; when only the direct condition check succeeds,
// the configuration itself is.
struct AnalysisReport {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t c = 0;
    mpz_class bound;        // 3c(k-1)k
    mpz_class margin;       // n - bound (negative when the inequality fails)
    bool inequality = false; // n > bound
    std::optional<ConditionReport> conditions;
    Conclusion conclusion = Conclusion::inconclusive;

    bool certified() const { return conclusion != Conclusion::inconclusive; }
};

AnalysisReport analyze(const CoherentConfiguration& x, bool deep = false,
                       const ConditionOptions& opts = {});

// Upper bound for the indistinguishing number of the multiplicative scheme
// over GF(p^d): sum over 0 < i < d of (p^gcd(i,d) - 1). Zero for d = 1.
mpz_class indistinguishing_bound(std::int64_t p, std::int64_t d);

// The inequality 3 * bound * (d-1) * d < p^d - 1 in exact arithmetic.
struct InequalityResult {
    bool holds = false;
    mpz_class lhs;
    mpz_class rhs;
};
InequalityResult cyclotomic_bound_inequality(std::int64_t p, std::int64_t d);

// A prime power p^d for which the inequality fails.
struct ExceptionalPair {
    std::int64_t p = 0;
    std::int64_t d = 0;
    mpz_class lhs;
    mpz_class rhs;
};

// All failures of the inequality over 2 <= p <= 23 prime, 2 <= d <= 33,
// sorted by (p, d). Outside that box the inequality always holds.
std::vector<ExceptionalPair> exceptional_pairs();

// True when (p,d) lies in the enumeration box and the inequality fails.
bool is_exceptional_pair(std::int64_t p, std::int64_t d);

// End-to-end certificate that the cyclotomic scheme over GF(p^d) with
// subgroup M is determined by its 2-dimensional intersection numbers:
// builds the scheme, extends at 0, restricts, verifies the restriction is
// a fission of the multiplicative scheme, and certifies via the pair
// classification or via analyze() on the restriction.
struct TwoSeparabilityReport {
    std::int64_t p = 0, d = 0, q = 0;
    std::int64_t subgroup_index = 0, subgroup_size = 0;
    bool fission_of_c_scheme = false;
    bool exceptional = false;
    AnalysisReport restriction_analysis;
    bool certified = false;
    std::string path; // which argument certified (or "none")
};

TwoSeparabilityReport two_separability_report(const FiniteField& field,
                                              const std::vector<FieldElement>& m,
                                              const Budget& budget = Budget::defaults());

// Upper bound for the Weisfeiler-Leman dimension of the Paley graph or
// tournament on q vertices: 3 unless (p,d) is an unresolved exceptional
// pair. The published exception list for the p = 5 row disagrees with the
// computed one; the discrepancy is reported via `flags`, not patched.
struct PaleyBoundReport {
    std::int64_t q = 0, p = 0, d = 0;
    PaleyKind kind = PaleyKind::graph;
    std::optional<int> bound; // 3, or empty = unknown
    std::vector<std::string> flags;
};

PaleyBoundReport paley_wl_bound(std::int64_t q);
PaleyBoundReport paley_wl_bound(std::int64_t q, PaleyKind kind);

} // namespace cckit
