#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cckit/builders.hpp"
#include "cckit/closure.hpp"
#include "cckit/errors.hpp"
#include "cckit/iso.hpp"
#include "support.hpp"

using namespace cckit;

TEST_CASE("automorphism groups of small configurations") {
    CHECK(automorphism_group(trivial_scheme(4)).order == 24);
    CHECK(automorphism_group(paley(5, PaleyKind::graph).scheme).order == 10);
    CHECK(automorphism_group(c_scheme(FiniteField::build(2, 3))).order == 21);
    CHECK(automorphism_group(discrete_configuration(5)).order == 1);
}

TEST_CASE("automorphism search agrees with the all-permutations filter") {
    std::vector<CoherentConfiguration> cases;
    cases.push_back(trivial_scheme(4));
    cases.push_back(discrete_configuration(4));
    cases.push_back(paley(5, PaleyKind::graph).scheme);
    cases.push_back(paley(7, PaleyKind::tournament).scheme);
    cases.push_back(point_extension(trivial_scheme(6), 0));
    for (const auto& x : cases) {
        auto g = automorphism_group(x);
        auto naive = oracle::automorphisms_by_filter(x);
        CHECK(g.order == static_cast<std::int64_t>(naive.size()));
        std::set<std::vector<int>> found(g.elements.begin(), g.elements.end());
        std::set<std::vector<int>> expected(naive.begin(), naive.end());
        CHECK(found == expected);
    }
}

TEST_CASE("automorphism sets satisfy the group axioms") {
    auto x = paley(7, PaleyKind::tournament).scheme;
    auto g = automorphism_group(x);
    std::set<std::vector<int>> elems(g.elements.begin(), g.elements.end());
    std::int64_t fact = 1;
    for (int i = 2; i <= x.n; ++i) fact *= i;
    CHECK(fact % g.order == 0);
    for (const auto& a : g.elements) {
        std::vector<int> inv(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) inv[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
        CHECK(elems.count(inv));
        for (const auto& b : g.elements) {
            std::vector<int> ab(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) ab[i] = b[static_cast<std::size_t>(a[i])];
            CHECK(elems.count(ab));
        }
    }
    // the reduced generating set actually generates the group
    auto regen = PermGroup::from_generators(g.degree, g.generators);
    CHECK(regen.order == g.order);
}

TEST_CASE("isomorphism enumeration") {
    auto d1 = discrete_configuration(1);
    CHECK(isomorphisms(d1, d1).size() == 1);

    auto p5 = paley(5, PaleyKind::graph).scheme;
    // 10 automorphisms x 2 algebraic automorphisms (the class swap)
    CHECK(isomorphism_count(p5, p5) == 20);
    CHECK(isomorphisms(p5, p5).size() == 20);

    CHECK(isomorphism_count(p5, trivial_scheme(5)) == 0);

    // a relabeled copy is isomorphic
    std::vector<int> perm{3, 0, 4, 1, 2};
    std::vector<int> relabeled(25);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            relabeled[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)]) * 5 +
                      perm[static_cast<std::size_t>(b)]] = p5.color(a, b);
    auto copy = from_color_matrix_canonical(5, relabeled);
    CHECK(isomorphism_count(p5, copy) == 20);
}

TEST_CASE("algebraic isomorphisms") {
    auto t5 = trivial_scheme(5);
    CHECK(algebraic_isomorphisms(t5, t5).size() == 1);

    auto p13 = paley(13, PaleyKind::graph).scheme;
    auto maps = algebraic_isomorphisms(p13, p13);
    CHECK(maps.size() == 2); // identity and the conference-graph class swap

    CHECK(algebraic_isomorphisms(p13, trivial_scheme(13)).empty());

    // different degrees, same rank: no maps (valencies differ)
    auto p9 = paley(9, PaleyKind::graph).scheme;
    CHECK(algebraic_isomorphisms(p13, p9).empty());
}

TEST_CASE("found algebraic maps preserve structure") {
    std::vector<CoherentConfiguration> cases;
    cases.push_back(paley(13, PaleyKind::graph).scheme);
    cases.push_back(c_scheme(FiniteField::build(3, 2)));
    cases.push_back(point_extension(paley(5, PaleyKind::graph).scheme, 0));
    for (const auto& x : cases) {
        auto tensor = full_tensor(x);
        for (const auto& map : algebraic_isomorphisms(x, x)) {
            const auto& phi = map.phi;
            // converse, reflexivity, valency
            for (int r = 0; r < x.rank; ++r) {
                CHECK(phi[static_cast<std::size_t>(x.converse[static_cast<std::size_t>(r)])] ==
                      x.converse[static_cast<std::size_t>(phi[static_cast<std::size_t>(r)])]);
                CHECK(x.reflexive[static_cast<std::size_t>(r)] ==
                      x.reflexive[static_cast<std::size_t>(phi[static_cast<std::size_t>(r)])]);
                CHECK(x.valency[static_cast<std::size_t>(r)] ==
                      x.valency[static_cast<std::size_t>(phi[static_cast<std::size_t>(r)])]);
            }
            // every intersection number
            for (int r = 0; r < x.rank; ++r)
                for (int s = 0; s < x.rank; ++s)
                    for (int t = 0; t < x.rank; ++t)
                        CHECK(tensor.get(r, s, t) ==
                              tensor.get(phi[static_cast<std::size_t>(r)], phi[static_cast<std::size_t>(s)],
                                         phi[static_cast<std::size_t>(t)]));
            // complex products transport
            std::vector<std::vector<int>> prods(static_cast<std::size_t>(x.rank) * x.rank);
            for (int r = 0; r < x.rank; ++r)
                for (int s = 0; s < x.rank; ++s) {
                    auto prod = complex_product(x, r, s);
                    std::vector<int> mapped;
                    for (int t : prod) mapped.push_back(phi[static_cast<std::size_t>(t)]);
                    std::sort(mapped.begin(), mapped.end());
                    CHECK(mapped == complex_product(x, phi[static_cast<std::size_t>(r)],
                                                    phi[static_cast<std::size_t>(s)]));
                    prods[static_cast<std::size_t>(r) * x.rank + s] = std::move(prod);
                }
            // ... and so do intersections of two products, over all 4-tuples
            if (x.rank <= 6) {
                auto image_of = [&](const std::vector<int>& set) {
                    std::vector<int> out;
                    for (int t : set) out.push_back(phi[static_cast<std::size_t>(t)]);
                    std::sort(out.begin(), out.end());
                    return out;
                };
                auto intersect = [](const std::vector<int>& a, const std::vector<int>& b) {
                    std::vector<int> out;
                    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                          std::back_inserter(out));
                    return out;
                };
                for (int r = 0; r < x.rank; ++r)
                    for (int s = 0; s < x.rank; ++s)
                        for (int u = 0; u < x.rank; ++u)
                            for (int v = 0; v < x.rank; ++v) {
                                const auto& rs = prods[static_cast<std::size_t>(r) * x.rank + s];
                                const auto& uv = prods[static_cast<std::size_t>(u) * x.rank + v];
                                auto lhs = image_of(intersect(rs, uv));
                                auto rhs = intersect(
                                    prods[static_cast<std::size_t>(phi[static_cast<std::size_t>(r)]) * x.rank +
                                          phi[static_cast<std::size_t>(s)]],
                                    prods[static_cast<std::size_t>(phi[static_cast<std::size_t>(u)]) * x.rank +
                                          phi[static_cast<std::size_t>(v)]]);
                                CHECK(lhs == rhs);
                            }
            }
        }
    }
}

TEST_CASE("arrows transport along algebraic maps") {
    auto x = c_scheme(FiniteField::build(3, 2));
    auto tensor = full_tensor(x);
    for (const auto& map : algebraic_isomorphisms(x, x)) {
        const auto& phi = map.phi;
        for (int a = 0; a < x.rank; ++a)
            for (int r = 0; r < x.rank; ++r)
                for (int b = 0; b < x.rank; ++b)
                    CHECK((tensor.get(a, r, b) == 1) ==
                          (tensor.get(phi[static_cast<std::size_t>(a)], phi[static_cast<std::size_t>(r)],
                                      phi[static_cast<std::size_t>(b)]) == 1));
    }
}

TEST_CASE("every found isomorphism induces an algebraic map") {
    auto x = paley(5, PaleyKind::graph).scheme;
    for (const auto& f : isomorphisms(x, x)) {
        // read the induced relation map off the permuted matrix
        std::vector<int> induced(static_cast<std::size_t>(x.rank), -1);
        for (int a = 0; a < x.n; ++a)
            for (int b = 0; b < x.n; ++b) {
                int src = x.color(a, b);
                int dst = x.color(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]);
                if (induced[static_cast<std::size_t>(src)] == -1)
                    induced[static_cast<std::size_t>(src)] = dst;
                else
                    REQUIRE(induced[static_cast<std::size_t>(src)] == dst);
            }
        // and the induced map preserves the tensor
        auto tensor = full_tensor(x);
        for (int r = 0; r < x.rank; ++r)
            for (int s = 0; s < x.rank; ++s)
                for (int t = 0; t < x.rank; ++t)
                    CHECK(tensor.get(r, s, t) ==
                          tensor.get(induced[static_cast<std::size_t>(r)], induced[static_cast<std::size_t>(s)],
                                     induced[static_cast<std::size_t>(t)]));
    }
}

TEST_CASE("separability witness on the smallest multiplicative schemes") {
    auto c4 = c_scheme(FiniteField::build(2, 2)); // trivial scheme on 3 points
    auto report = separability_witness(c4);
    CHECK(report.aut_order == 6);
    CHECK(report.aiso_count == 1);
    CHECK(report.iso_count == 6);
    CHECK(report.ok);

    auto c8 = c_scheme(FiniteField::build(2, 3));
    auto report8 = separability_witness(c8);
    CHECK(report8.aut_order == 21);
    CHECK(report8.ok);
}

TEST_CASE("schurity of small configurations") {
    CHECK(is_schurian(discrete_configuration(4)));
    CHECK(is_schurian(trivial_scheme(9)));
    CHECK(is_schurian(paley(13, PaleyKind::graph).scheme));
    // multiplicative schemes are orbital configurations, hence schurian
    CHECK(is_schurian(c_scheme(FiniteField::build(3, 2))));
}

TEST_CASE("schurity agrees with the naive orbital comparison") {
    std::vector<CoherentConfiguration> cases;
    cases.push_back(trivial_scheme(5));
    cases.push_back(discrete_configuration(4));
    cases.push_back(paley(5, PaleyKind::graph).scheme);
    cases.push_back(paley(7, PaleyKind::tournament).scheme);
    cases.push_back(point_extension(trivial_scheme(6), 1));
    for (const auto& x : cases) {
        // naive: collect all automorphisms by filtering permutations, then
        // compare the orbital configuration partition-wise
        auto naive_auts = oracle::automorphisms_by_filter(x);
        auto orbital = orbital_config(x.n, naive_auts);
        bool naive_schurian = same_partition(orbital, x);
        CHECK(is_schurian(x) == naive_schurian);
    }
}

TEST_CASE("fused distance classes on the 6-cycle") {
    // fuse the distance-1 and distance-2 classes of the 6-cycle, keeping the
    // antipodal matching separate; coherent, and schurian (S2 wr S3 acts)
    std::vector<int> colors(36);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int d = (b - a + 6) % 6;
            colors[static_cast<std::size_t>(a) * 6 + b] = d == 0 ? 0 : (d == 3 ? 2 : 1);
        }
    auto x = from_color_matrix(6, colors);
    auto naive = oracle::automorphisms_by_filter(x);
    CHECK(is_schurian(x));
    CHECK(is_schurian(x) == same_partition(orbital_config(6, naive), x));
}
