#include "cckit/builders.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "cckit/closure.hpp"
#include "cckit/errors.hpp"

namespace cckit {

namespace {

void check_permutation(int degree, const std::vector<int>& g) {
    if (static_cast<int>(g.size()) != degree) throw Error("permutation has wrong degree");
    std::vector<char> seen(static_cast<std::size_t>(degree), 0);
    for (int v : g) {
        if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)])
            throw Error("not a permutation");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
    // (f*g)(x) = g(f(x)): apply f first
    std::vector<int> h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) h[i] = g[static_cast<std::size_t>(f[i])];
    return h;
}

} // namespace

PermGroup PermGroup::from_generators(int degree, std::vector<std::vector<int>> generators,
                                     const Budget& budget) {
    if (degree <= 0) throw Error("degree must be positive");
    for (const auto& g : generators) check_permutation(degree, g);

    PermGroup k;
    k.degree = degree;
    k.generators = std::move(generators);

    std::vector<int> id(static_cast<std::size_t>(degree));
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> elems;
    elems.insert(id);
    std::queue<std::vector<int>> work;
    work.push(id);
    while (!work.empty()) {
        std::vector<int> cur = std::move(work.front());
        work.pop();
        for (const auto& g : k.generators) {
            std::vector<int> nxt = compose(cur, g);
            if (elems.insert(nxt).second) {
                if (static_cast<std::int64_t>(elems.size()) > budget.group_elements)
                    throw BudgetError("group order exceeds element budget");
                work.push(std::move(nxt));
            }
        }
    }
    k.elements.assign(elems.begin(), elems.end());
    k.order = static_cast<std::int64_t>(k.elements.size());
    return k;
}

PermGroup PermGroup::symmetric(int degree, const Budget& budget) {
    std::vector<std::vector<int>> gens;
    if (degree >= 2) {
        std::vector<int> t(static_cast<std::size_t>(degree));
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[0], t[1]);
        std::vector<int> c(static_cast<std::size_t>(degree));
        for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = (i + 1) % degree;
        gens = {t, c};
    }
    return from_generators(degree, std::move(gens), budget);
}

PermGroup PermGroup::identity(int degree) { return from_generators(degree, {}); }

CoherentConfiguration orbital_config(int degree, const std::vector<std::vector<int>>& generators) {
    for (const auto& g : generators) check_permutation(degree, g);
    const int n = degree;
    std::vector<int> orbit(static_cast<std::size_t>(n) * n, -1);
    int next_id = 0;
    std::vector<int> stack;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::size_t start = static_cast<std::size_t>(a) * n + b;
            if (orbit[start] != -1) continue;
            int id = next_id++;
            orbit[start] = id;
            stack.push_back(static_cast<int>(start));
            while (!stack.empty()) {
                int cell = stack.back();
                stack.pop_back();
                int u = cell / n, v = cell % n;
                for (const auto& g : generators) {
                    std::size_t img = static_cast<std::size_t>(g[static_cast<std::size_t>(u)]) * n +
                                      g[static_cast<std::size_t>(v)];
                    if (orbit[img] == -1) {
                        orbit[img] = id;
                        stack.push_back(static_cast<int>(img));
                    }
                }
            }
        }
    return from_color_matrix_canonical(n, std::move(orbit));
}

CoherentConfiguration orbital_config(const PermGroup& k) {
    return orbital_config(k.degree, k.generators);
}

CoherentConfiguration cyclotomic_scheme(const FiniteField& field,
                                        const std::vector<FieldElement>& m) {
    const std::int64_t q = field.q();
    if (m.empty()) throw Error("subgroup must be nonempty");

    // verify M is a multiplicative subgroup containing 1
    std::vector<char> in_m(static_cast<std::size_t>(q), 0);
    for (const auto& e : m) {
        if (e.is_zero()) throw Error("0 cannot belong to a multiplicative subgroup");
        in_m[static_cast<std::size_t>(e.index())] = 1;
    }
    if (!in_m[1]) throw Error("subgroup must contain 1");
    for (const auto& a : m)
        for (const auto& b : m)
            if (!in_m[static_cast<std::size_t>((a * b).index())])
                throw Error("set is not closed under multiplication");
    if ((q - 1) % static_cast<std::int64_t>(m.size()) != 0)
        throw Error("set size does not divide the group order");

    // coset id of every nonzero element
    std::vector<int> coset(static_cast<std::size_t>(q), -1);
    int next_id = 0;
    for (std::int64_t e = 1; e < q; ++e) {
        if (coset[static_cast<std::size_t>(e)] != -1) continue;
        int id = next_id++;
        FieldElement rep = field.element(e);
        for (const auto& mm : m) coset[static_cast<std::size_t>((rep * mm).index())] = id;
    }

    const int n = static_cast<int>(q);
    std::vector<int> colors(static_cast<std::size_t>(n) * n);
    auto elems = field.elements();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            colors[static_cast<std::size_t>(a) * n + b] =
                a == b ? 0 : 1 + coset[static_cast<std::size_t>((elems[static_cast<std::size_t>(b)] -
                                                                 elems[static_cast<std::size_t>(a)])
                                                                    .index())];
    return from_color_matrix_canonical(n, std::move(colors));
}

CoherentConfiguration c_scheme(const FiniteField& field) {
    const std::int64_t q = field.q();
    const int n = static_cast<int>(q - 1);

    // points are nonzero elements: point i <-> element index i+1
    std::vector<int> mul_gen(static_cast<std::size_t>(n));
    std::vector<int> frob_gen(static_cast<std::size_t>(n));
    FieldElement xi = field.primitive_element();
    for (int i = 0; i < n; ++i) {
        FieldElement e = field.element(i + 1);
        mul_gen[static_cast<std::size_t>(i)] = static_cast<int>((e * xi).index() - 1);
        frob_gen[static_cast<std::size_t>(i)] = static_cast<int>(e.frobenius().index() - 1);
    }
    return orbital_config(n, {mul_gen, frob_gen});
}

std::pair<std::int64_t, std::int64_t> factor_prime_power(std::int64_t q) {
    if (q < 2) throw Error(std::to_string(q) + " is not a prime power");
    std::int64_t p = q;
    for (std::int64_t f = 2; f * f <= q; ++f)
        if (q % f == 0) {
            p = f;
            break;
        }
    std::int64_t d = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++d;
    }
    if (rest != 1) throw Error(std::to_string(q) + " is not a prime power");
    return {p, d};
}

PaleyResult paley(std::int64_t q, PaleyKind kind) {
    auto [p, d] = factor_prime_power(q);
    if (p == 2) throw Error("Paley parameter must be odd");
    std::int64_t residue = q % 4;
    if (kind == PaleyKind::graph && residue != 1)
        throw Error("Paley graph needs q = 1 mod 4, got q = " + std::to_string(q));
    if (kind == PaleyKind::tournament && residue != 3)
        throw Error("Paley tournament needs q = 3 mod 4, got q = " + std::to_string(q));

    PaleyResult result;
    result.field = FiniteField::build(p, d);
    auto squares = multiplicative_subgroup(result.field, 2);
    std::vector<char> is_square(static_cast<std::size_t>(q), 0);
    for (const auto& s : squares) is_square[static_cast<std::size_t>(s.index())] = 1;

    auto elems = result.field.elements();
    const int n = static_cast<int>(q);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            auto diff = elems[static_cast<std::size_t>(b)] - elems[static_cast<std::size_t>(a)];
            if (is_square[static_cast<std::size_t>(diff.index())]) result.arcs.push_back({a, b});
        }
    result.scheme = graph_closure(result.arcs, n);
    return result;
}

} // namespace cckit
