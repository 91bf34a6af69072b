#pragma once

// Shared fixtures and independent oracles for the test suites. Everything in
// here is deliberately written against the definitions directly (dense
// loops, exhaustive filters) and stays independent of the library code paths
// it cross-checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cckit/builders.hpp"
#include "cckit/config.hpp"
#include "cckit/gf.hpp"

namespace oracle {

// ---- polynomial helpers over GF(p), for the modulus oracle ----

using Poly = std::vector<int>; // lowest degree first, no trailing zeros

inline Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

inline Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_trim(r);
}

inline Poly poly_of(std::int64_t index, int p, int degree) {
    Poly f;
    for (int i = 0; i < degree; ++i) {
        f.push_back(static_cast<int>(index % p));
        index /= p;
    }
    f.push_back(1); // monic
    return f;
}

// irreducible iff no product of two monic lower-degree polynomials equals f
inline bool poly_irreducible(const Poly& f, int p) {
    int deg = static_cast<int>(f.size()) - 1;
    for (int da = 1; da < deg; ++da) {
        int db = deg - da;
        std::int64_t ca = 1, cb = 1;
        for (int i = 0; i < da; ++i) ca *= p;
        for (int i = 0; i < db; ++i) cb *= p;
        for (std::int64_t ia = 0; ia < ca; ++ia)
            for (std::int64_t ib = 0; ib < cb; ++ib) {
                Poly a = poly_of(ia, p, da);
                Poly b = poly_of(ib, p, db);
                if (poly_trim(poly_mul(a, b, p)) == poly_trim(f)) return false;
            }
    }
    return true;
}

// least monic irreducible of the given degree, as the full coefficient vector
inline std::vector<std::int64_t> least_irreducible(int p, int d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t low = 0; low < count; ++low) {
        Poly f = poly_of(low, p, d);
        if (poly_irreducible(f, p)) return std::vector<std::int64_t>(f.begin(), f.end());
    }
    return {};
}

// ---- direct coherence check against the definition ----

inline bool coherent_by_definition(int n, const std::vector<int>& colors) {
    int rank = *std::max_element(colors.begin(), colors.end()) + 1;
    auto at = [&](int a, int b) { return colors[static_cast<std::size_t>(a) * n + b]; };
    // diagonal closed
    std::set<int> diag;
    for (int a = 0; a < n; ++a) diag.insert(at(a, a));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && diag.count(at(a, b))) return false;
    // converse well defined
    std::vector<int> conv(static_cast<std::size_t>(rank), -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int& c = conv[static_cast<std::size_t>(at(a, b))];
            if (c == -1) c = at(b, a);
            else if (c != at(b, a)) return false;
        }
    // constant intersection numbers
    std::map<std::tuple<int, int, int>, std::int64_t> numbers;
    std::vector<std::vector<std::int64_t>> counts(
        static_cast<std::size_t>(rank), std::vector<std::int64_t>(static_cast<std::size_t>(rank)));
    std::vector<char> have(static_cast<std::size_t>(rank), 0);
    std::vector<std::vector<std::vector<std::int64_t>>> reference(static_cast<std::size_t>(rank));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (auto& row : counts) std::fill(row.begin(), row.end(), 0);
            for (int g = 0; g < n; ++g)
                ++counts[static_cast<std::size_t>(at(a, g))][static_cast<std::size_t>(at(g, b))];
            int t = at(a, b);
            if (!have[static_cast<std::size_t>(t)]) {
                have[static_cast<std::size_t>(t)] = 1;
                reference[static_cast<std::size_t>(t)] = counts;
            } else if (reference[static_cast<std::size_t>(t)] != counts) {
                return false;
            }
        }
    return true;
}

// ---- exhaustive permutation filters (n <= 8) ----

inline std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::vector<std::vector<int>> automorphisms_by_filter(const cckit::CoherentConfiguration& x) {
    std::vector<std::vector<int>> out;
    for (const auto& f : all_permutations(x.n)) {
        bool ok = true;
        for (int a = 0; a < x.n && ok; ++a)
            for (int b = 0; b < x.n && ok; ++b)
                ok = x.color(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]) ==
                     x.color(a, b);
        if (ok) out.push_back(f);
    }
    return out;
}

// ---- orbit count of multiplication by p on Z_{q-1} (suborbit oracle) ----

inline int exponent_orbit_count(std::int64_t p, std::int64_t q) {
    std::int64_t m = q - 1;
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    int orbits = 0;
    for (std::int64_t i = 0; i < m; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        ++orbits;
        std::int64_t j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = 1;
            j = j * p % m;
        }
    }
    return orbits;
}

// ---- every coherent configuration on <= 5 points ----
// On so few points each one is the orbital configuration of a permutation
// group, and every subgroup of Sym(5) is generated by two elements, so
// closing all generator pairs enumerates them all.

inline std::vector<cckit::CoherentConfiguration> all_configurations_upto5(int n) {
    auto perms = all_permutations(n);
    std::set<std::vector<int>> seen_colors;
    std::vector<cckit::CoherentConfiguration> out;
    for (const auto& g1 : perms)
        for (const auto& g2 : perms) {
            auto x = cckit::orbital_config(n, {g1, g2});
            if (seen_colors.insert(x.colors).second) out.push_back(std::move(x));
        }
    return out;
}

// ---- hand-rolled unsigned bignum (base 10^9) for the inequality oracle ----

struct BigNat {
    std::vector<std::uint32_t> limbs; // little endian, base 1e9

    static BigNat from(std::uint64_t v) {
        BigNat b;
        while (v) {
            b.limbs.push_back(static_cast<std::uint32_t>(v % 1000000000));
            v /= 1000000000;
        }
        return b;
    }

    void mul_small(std::uint64_t f) {
        std::uint64_t carry = 0;
        for (auto& limb : limbs) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
            limb = static_cast<std::uint32_t>(cur % 1000000000);
            carry = cur / 1000000000;
        }
        while (carry) {
            limbs.push_back(static_cast<std::uint32_t>(carry % 1000000000));
            carry /= 1000000000;
        }
    }

    void add(const BigNat& o) {
        limbs.resize(std::max(limbs.size(), o.limbs.size()), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs.size(); ++i) {
            std::uint64_t cur = carry + limbs[i] + (i < o.limbs.size() ? o.limbs[i] : 0);
            limbs[i] = static_cast<std::uint32_t>(cur % 1000000000);
            carry = cur / 1000000000;
        }
        if (carry) limbs.push_back(static_cast<std::uint32_t>(carry));
    }

    void sub_small(std::uint64_t v) { // assumes result nonnegative
        std::uint64_t borrow = v;
        for (std::size_t i = 0; i < limbs.size() && borrow; ++i) {
            std::uint64_t take = borrow % 1000000000;
            borrow /= 1000000000;
            if (limbs[i] >= take) {
                limbs[i] -= static_cast<std::uint32_t>(take);
            } else {
                limbs[i] += static_cast<std::uint32_t>(1000000000 - take);
                ++borrow;
            }
        }
        while (!limbs.empty() && limbs.back() == 0) limbs.pop_back();
    }

    static BigNat pow(std::uint64_t base, std::uint64_t exp) {
        BigNat b = from(1);
        for (std::uint64_t i = 0; i < exp; ++i) b.mul_small(base);
        return b;
    }

    int compare(const BigNat& o) const {
        if (limbs.size() != o.limbs.size()) return limbs.size() < o.limbs.size() ? -1 : 1;
        for (std::size_t i = limbs.size(); i-- > 0;)
            if (limbs[i] != o.limbs[i]) return limbs[i] < o.limbs[i] ? -1 : 1;
        return 0;
    }

    std::string str() const {
        if (limbs.empty()) return "0";
        std::string s = std::to_string(limbs.back());
        for (std::size_t i = limbs.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs[i]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }
};

// second route for the bound inequality: lhs/rhs via BigNat
inline bool inequality_by_bignat(std::int64_t p, std::int64_t d, std::string* lhs_str = nullptr,
                                 std::string* rhs_str = nullptr) {
    BigNat sum = BigNat::from(0);
    for (std::int64_t i = 1; i < d; ++i) {
        BigNat term = BigNat::pow(static_cast<std::uint64_t>(p),
                                  static_cast<std::uint64_t>(std::gcd(i, d)));
        term.sub_small(1);
        sum.add(term);
    }
    sum.mul_small(3);
    sum.mul_small(static_cast<std::uint64_t>(d - 1));
    sum.mul_small(static_cast<std::uint64_t>(d));
    BigNat rhs = BigNat::pow(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(d));
    rhs.sub_small(1);
    if (lhs_str) *lhs_str = sum.str();
    if (rhs_str) *rhs_str = rhs.str();
    return sum.compare(rhs) < 0;
}

// ---- corpus builders ----

inline std::vector<std::int64_t> prime_powers_upto(std::int64_t qmax) {
    std::vector<std::int64_t> list;
    for (std::int64_t q = 2; q <= qmax; ++q) {
        std::int64_t p = q;
        for (std::int64_t f = 2; f * f <= q; ++f)
            if (q % f == 0) {
                p = f;
                break;
            }
        std::int64_t rest = q;
        while (rest % p == 0) rest /= p;
        if (rest == 1) list.push_back(q);
    }
    return list;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

struct CyclotomicInstance {
    std::int64_t q = 0;
    std::int64_t index = 0; // subgroup index in the multiplicative group
    cckit::FiniteField field;
    cckit::CoherentConfiguration scheme;
};

// every cyclotomic scheme with q <= qmax (one instance per subgroup)
inline std::vector<CyclotomicInstance> cyclotomic_corpus(std::int64_t qmax) {
    std::vector<CyclotomicInstance> out;
    for (std::int64_t q : prime_powers_upto(qmax)) {
        auto [p, d] = cckit::factor_prime_power(q);
        auto field = cckit::FiniteField::build(p, d);
        for (std::int64_t index : divisors(q - 1)) {
            CyclotomicInstance inst;
            inst.q = q;
            inst.index = index;
            inst.field = field;
            inst.scheme = cckit::cyclotomic_scheme(field, cckit::multiplicative_subgroup(field, index));
            out.push_back(std::move(inst));
        }
    }
    return out;
}

// assorted small permutation groups for orbital configurations
inline std::vector<cckit::PermGroup> small_groups() {
    using cckit::PermGroup;
    std::vector<PermGroup> gs;
    gs.push_back(PermGroup::identity(4));
    gs.push_back(PermGroup::symmetric(4));
    gs.push_back(PermGroup::symmetric(6));
    gs.push_back(PermGroup::from_generators(5, {{1, 2, 3, 4, 0}}));                 // C5
    gs.push_back(PermGroup::from_generators(5, {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}})); // D5
    gs.push_back(PermGroup::from_generators(6, {{1, 2, 0, 4, 5, 3}}));              // C3 x C3 action
    gs.push_back(PermGroup::from_generators(6, {{1, 0, 3, 2, 5, 4}, {2, 3, 4, 5, 0, 1}}));
    gs.push_back(PermGroup::from_generators(7, {{1, 2, 3, 4, 5, 6, 0}}));           // C7
    gs.push_back(PermGroup::from_generators(7, {{1, 2, 3, 4, 5, 6, 0}, {0, 2, 4, 6, 1, 3, 5}})); // F21
    gs.push_back(PermGroup::from_generators(8, {{1, 2, 3, 0, 5, 6, 7, 4}, {4, 5, 6, 7, 0, 1, 2, 3}}));
    return gs;
}

} // namespace oracle
