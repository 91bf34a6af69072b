#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cckit/builders.hpp"
#include "cckit/closure.hpp"
#include "cckit/errors.hpp"
#include "cckit/separability.hpp"
#include "support.hpp"

using namespace cckit;

TEST_CASE("indistinguishing bound values") {
    CHECK(indistinguishing_bound(3, 2) == 2);
    CHECK(indistinguishing_bound(2, 4) == 5); // 1 + 3 + 1
    CHECK(indistinguishing_bound(7, 1) == 0);
    CHECK(indistinguishing_bound(13, 1) == 0);
    CHECK(indistinguishing_bound(2, 9) == 20); // 1+1+7+1+1+7+1+1
}

TEST_CASE("bound inequality on pinned pairs") {
    auto r32 = cyclotomic_bound_inequality(3, 2);
    CHECK(r32.lhs == 12);
    CHECK(r32.rhs == 8);
    CHECK_FALSE(r32.holds);

    auto r213 = cyclotomic_bound_inequality(2, 13);
    CHECK(r213.lhs == 5616);
    CHECK(r213.rhs == 8191);
    CHECK(r213.holds);

    auto r221 = cyclotomic_bound_inequality(2, 21);
    CHECK(r221.lhs == 388080);
    CHECK(r221.rhs == 2097151);
    CHECK(r221.holds);

    // the tight failures at both ends of the p=5 row
    auto r52 = cyclotomic_bound_inequality(5, 2);
    CHECK(r52.lhs == 24);
    CHECK(r52.rhs == 24);
    CHECK_FALSE(r52.holds);
    auto r56 = cyclotomic_bound_inequality(5, 6);
    CHECK(r56.lhs == 16200);
    CHECK(r56.rhs == 15624);
    CHECK_FALSE(r56.holds);

    CHECK_THROWS_AS(cyclotomic_bound_inequality(2, 1), Error);
}

TEST_CASE("inequality agrees with the independent bignum route") {
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23})
        for (std::int64_t d = 2; d <= 33; ++d) {
            auto r = cyclotomic_bound_inequality(p, d);
            std::string lhs, rhs;
            bool holds = oracle::inequality_by_bignat(p, d, &lhs, &rhs);
            CHECK(r.holds == holds);
            CHECK(r.lhs.get_str() == lhs);
            CHECK(r.rhs.get_str() == rhs);
        }
}

TEST_CASE("exceptional pairs match the frozen classification") {
    std::set<std::pair<std::int64_t, std::int64_t>> expected;
    for (std::int64_t d : {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 18, 20})
        expected.insert({2, d});
    for (std::int64_t d : {2, 3, 4, 5, 6, 8, 10}) expected.insert({3, d});
    for (std::int64_t d : {2, 3, 4, 6}) expected.insert({5, d});

    std::set<std::pair<std::int64_t, std::int64_t>> got;
    for (const auto& pair : exceptional_pairs()) {
        got.insert({pair.p, pair.d});
        CHECK(pair.lhs >= pair.rhs);
    }
    CHECK(got == expected);

    // sorted output
    auto list = exceptional_pairs();
    for (std::size_t i = 1; i < list.size(); ++i)
        CHECK(std::make_pair(list[i - 1].p, list[i - 1].d) < std::make_pair(list[i].p, list[i].d));

    CHECK(is_exceptional_pair(3, 2));
    CHECK_FALSE(is_exceptional_pair(3, 7));
    CHECK_FALSE(is_exceptional_pair(2, 13));
    CHECK_FALSE(is_exceptional_pair(29, 2)); // outside the box
    CHECK_FALSE(is_exceptional_pair(7, 2));
    CHECK_FALSE(is_exceptional_pair(5, 5));
}

TEST_CASE("analysis of standard families") {
    auto disc = analyze(discrete_configuration(10));
    CHECK(disc.k == 1);
    CHECK(disc.bound == 0);
    CHECK(disc.inequality);
    CHECK(disc.certified());
    CHECK(disc.conclusion == Conclusion::fission_separable_certified);

    auto triv = analyze(trivial_scheme(100));
    CHECK(triv.k == 99);
    CHECK(triv.c == 98);
    CHECK_FALSE(triv.inequality);
    CHECK(triv.conclusion == Conclusion::inconclusive);

    auto c9 = analyze(c_scheme(FiniteField::build(3, 2)));
    CHECK(c9.n == 8);
    CHECK(c9.k == 2);
    CHECK_FALSE(c9.inequality); // bound >= 8 whenever c >= 2
    CHECK(c9.conclusion == Conclusion::inconclusive);
}

TEST_CASE("deep analysis uses the direct condition checks") {
    // thin scheme: inequality holds already
    auto f8 = FiniteField::build(2, 3);
    auto thin = cyclotomic_scheme(f8, multiplicative_subgroup(f8, 7));
    auto deep = analyze(thin, true);
    CHECK(deep.inequality);
    REQUIRE(deep.conditions.has_value());
    CHECK(deep.conditions->both_hold());

    // trivial scheme: inequality fails and the covering condition fails too
    auto t10 = analyze(trivial_scheme(10), true);
    CHECK_FALSE(t10.inequality);
    REQUIRE(t10.conditions.has_value());
    CHECK(t10.conditions->covering == Verdict::fails);
    CHECK(t10.conclusion == Conclusion::inconclusive);
}

TEST_CASE("measured parameters stay within the cyclotomic bounds") {
    for (std::int64_t q : {4, 8, 9, 16, 25, 27, 32}) {
        auto [p, d] = factor_prime_power(q);
        auto x = c_scheme(FiniteField::build(p, d));
        CHECK(max_valency(x) == d);
        if (x.n > 1 && x.rank > 1)
            CHECK(mpz_class(max_indistinguishing(x)) <= indistinguishing_bound(p, d));
    }
}

TEST_CASE("two-separability certificates") {
    auto f7 = FiniteField::build(7, 1);
    auto r7 = two_separability_report(f7, multiplicative_subgroup(f7, 2));
    CHECK(r7.certified);
    CHECK(r7.path == "valency-1");
    CHECK(r7.fission_of_c_scheme);

    auto f11 = FiniteField::build(11, 1);
    for (std::int64_t index : {1, 2, 5}) {
        auto r11 = two_separability_report(f11, multiplicative_subgroup(f11, index));
        CHECK(r11.certified);
    }

    auto f9 = FiniteField::build(3, 2);
    auto r9 = two_separability_report(f9, multiplicative_subgroup(f9, 1)); // M = F^x
    CHECK_FALSE(r9.certified);
    CHECK(r9.exceptional);
    // the restriction is the trivial scheme on 8 points (rank 2), which is
    // coarser than the rank-5 multiplicative scheme, so no fission here
    CHECK_FALSE(r9.fission_of_c_scheme);
    CHECK(r9.path == "none");

    auto f16 = FiniteField::build(2, 4);
    auto r16 = two_separability_report(f16, multiplicative_subgroup(f16, 3));
    CHECK_FALSE(r16.certified); // (2,4) is exceptional and the restriction is small
    CHECK(r16.fission_of_c_scheme);
}

TEST_CASE("restriction of the extended scheme refines the multiplicative scheme") {
    // the containment needs rank(restriction) >= 3: for M = F^x the
    // restriction collapses to the trivial scheme, which is coarser
    for (const auto& inst : oracle::cyclotomic_corpus(16)) {
        auto extended = point_extension(inst.scheme, 0);
        auto restricted = restrict_at_singleton(extended, 0);
        auto mult = c_scheme(inst.field);
        if (restricted.rank >= 3)
            CHECK(is_fission(restricted, mult));
        else
            CHECK(is_fission(restricted, mult) == (mult.rank <= restricted.rank));
    }
}

TEST_CASE("paley dimension bounds") {
    CHECK(paley_wl_bound(13).bound == 3);
    CHECK(paley_wl_bound(17).bound == 3);
    CHECK(paley_wl_bound(25).bound == 3);
    CHECK(paley_wl_bound(29).bound == 3);
    CHECK(paley_wl_bound(7).bound == 3); // tournament, d = 1

    CHECK_FALSE(paley_wl_bound(81).bound.has_value());   // 3^4 graph
    CHECK_FALSE(paley_wl_bound(729).bound.has_value());  // 3^6 graph
    CHECK_FALSE(paley_wl_bound(243).bound.has_value());  // 3^5 tournament
    CHECK(paley_wl_bound(243).kind == PaleyKind::tournament);

    CHECK_THROWS_AS(paley_wl_bound(8), Error);
    CHECK_THROWS_AS(paley_wl_bound(15), Error);
    CHECK_THROWS_AS(paley_wl_bound(13, PaleyKind::tournament), Error);
}

TEST_CASE("the p=5 discrepancy is flagged, not patched") {
    auto r125 = paley_wl_bound(125); // 5^3 = 1 mod 4, graph
    CHECK_FALSE(r125.bound.has_value());
    REQUIRE(!r125.flags.empty());
    bool has_mismatch = false;
    for (const auto& f : r125.flags) has_mismatch = has_mismatch || f.find("mismatch") != std::string::npos;
    CHECK(has_mismatch);

    auto r3125 = paley_wl_bound(3125); // 5^5: not exceptional by the formula
    CHECK(r3125.bound == 3);
    CHECK(!r3125.flags.empty()); // row discrepancy still reported

    auto r625 = paley_wl_bound(625); // 5^4: exceptional, unresolved, published agrees
    CHECK_FALSE(r625.bound.has_value());
}
