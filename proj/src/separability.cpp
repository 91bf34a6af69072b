#include "cckit/separability.hpp"

#include <numeric>

#include "cckit/closure.hpp"
#include "cckit/errors.hpp"

namespace cckit {

std::string to_string(Conclusion c) {
    switch (c) {
        case Conclusion::separable_certified: return "separable-certified";
        case Conclusion::fission_separable_certified: return "fission-separable-certified";
        case Conclusion::inconclusive: return "inconclusive";
    }
    return "?";
}

AnalysisReport analyze(const CoherentConfiguration& x, bool deep, const ConditionOptions& opts) {
    AnalysisReport report;
    report.n = x.n;
    report.k = max_valency(x);
    bool has_irreflexive = false;
    for (int s = 0; s < x.rank; ++s) has_irreflexive = has_irreflexive || !x.reflexive[static_cast<std::size_t>(s)];
    report.c = has_irreflexive ? max_indistinguishing(x) : 0;

    report.bound = mpz_class(3) * report.c * (report.k - 1) * report.k;
    report.margin = mpz_class(report.n) - report.bound;
    report.inequality = report.margin > 0;

    if (deep) report.conditions = check_separability_conditions(x, 0, opts);

    if (report.inequality)
        report.conclusion = Conclusion::fission_separable_certified;
    else if (report.conditions && report.conditions->both_hold())
        report.conclusion = Conclusion::separable_certified;
    else
        report.conclusion = Conclusion::inconclusive;
    return report;
}

mpz_class indistinguishing_bound(std::int64_t p, std::int64_t d) {
    if (p < 2 || d < 1) throw Error("invalid parameters");
    mpz_class total = 0;
    for (std::int64_t i = 1; i < d; ++i) {
        mpz_class term;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(std::gcd(i, d)));
        total += term - 1;
    }
    return total;
}

InequalityResult cyclotomic_bound_inequality(std::int64_t p, std::int64_t d) {
    if (d < 2) throw Error("inequality is stated for d >= 2");
    InequalityResult r;
    r.lhs = mpz_class(3) * indistinguishing_bound(p, d) * (d - 1) * d;
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    r.rhs = q - 1;
    r.holds = r.lhs < r.rhs;
    return r;
}

std::vector<ExceptionalPair> exceptional_pairs() {
    std::vector<ExceptionalPair> out;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23})
        for (std::int64_t d = 2; d <= 33; ++d) {
            InequalityResult r = cyclotomic_bound_inequality(p, d);
            if (!r.holds) out.push_back(ExceptionalPair{p, d, r.lhs, r.rhs});
        }
    return out;
}

bool is_exceptional_pair(std::int64_t p, std::int64_t d) {
    if (p < 2 || p > 23 || d < 2 || d > 33) return false;
    for (std::int64_t f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return !cyclotomic_bound_inequality(p, d).holds;
}

TwoSeparabilityReport two_separability_report(const FiniteField& field,
                                              const std::vector<FieldElement>& m,
                                              const Budget& budget) {
    TwoSeparabilityReport report;
    report.p = field.p();
    report.d = field.d();
    report.q = field.q();
    report.subgroup_size = static_cast<std::int64_t>(m.size());
    report.subgroup_index = (report.q - 1) / report.subgroup_size;

    CoherentConfiguration x = cyclotomic_scheme(field, m);
    CoherentConfiguration extended = point_extension(x, 0, budget);
    CoherentConfiguration restricted = restrict_at_singleton(extended, 0);
    CoherentConfiguration mult = c_scheme(field);
    report.fission_of_c_scheme = is_fission(restricted, mult);
    report.exceptional = is_exceptional_pair(report.p, report.d);
    report.restriction_analysis = analyze(restricted);

    if (report.d == 1) {
        report.certified = true;
        report.path = "valency-1";
    } else if (!report.exceptional) {
        report.certified = true;
        report.path = "pair-classification";
    } else if (report.restriction_analysis.certified()) {
        report.certified = true;
        report.path = "restriction-inequality";
    } else {
        report.certified = false;
        report.path = "none";
    }
    return report;
}

namespace {

PaleyBoundReport paley_bound_impl(std::int64_t q, PaleyKind kind) {
    PaleyBoundReport report;
    report.q = q;
    report.kind = kind;
    auto [p, d] = factor_prime_power(q);
    report.p = p;
    report.d = d;
    if (p == 2) throw Error("Paley parameter must be odd");
    if (kind == PaleyKind::graph && q % 4 != 1)
        throw Error("Paley graph needs q = 1 mod 4");
    if (kind == PaleyKind::tournament && q % 4 != 3)
        throw Error("Paley tournament needs q = 3 mod 4");

    // unresolved = exceptional minus the pairs settled by direct computation
    bool exceptional = is_exceptional_pair(p, d);
    bool resolved = (p == 3 && (d == 2 || d == 3)) || (p == 5 && d == 2);
    bool unresolved = exceptional && !resolved;
    if (!unresolved) report.bound = 3;

    // published exception lists for comparison
    bool published_unknown =
        kind == PaleyKind::graph
            ? (p == 3 && (d == 4 || d == 6 || d == 8 || d == 10)) || (p == 5 && (d == 4 || d == 6))
            : (p == 3 && d == 5);
    if (published_unknown != unresolved)
        report.flags.push_back("exception-list-mismatch: computed " +
                               std::string(unresolved ? "unknown" : "3") + " but published list says " +
                               std::string(published_unknown ? "unknown" : "3") + " for (p,d)=(" +
                               std::to_string(p) + "," + std::to_string(d) + ")");
    if (p == 5 && d >= 3)
        report.flags.push_back(
            "p5-row-discrepancy: computed exceptional degrees for p=5 are {3,4,6}, published row lists {4,5,6}");
    return report;
}

} // namespace

PaleyBoundReport paley_wl_bound(std::int64_t q) {
    std::int64_t r = q % 4;
    if (r == 1) return paley_bound_impl(q, PaleyKind::graph);
    if (r == 3) return paley_bound_impl(q, PaleyKind::tournament);
    throw Error("q = " + std::to_string(q) + " is not a Paley parameter");
}

PaleyBoundReport paley_wl_bound(std::int64_t q, PaleyKind kind) { return paley_bound_impl(q, kind); }

} // namespace cckit
