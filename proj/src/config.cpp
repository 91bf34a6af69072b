#include "cckit/config.hpp"

#include <algorithm>
#include <string>

#include "cckit/errors.hpp"

namespace cckit {

namespace {

// Sorted vector of keys (color(a,g)*rank + color(g,b)) over all g. The
// transpose matrix makes the column read contiguous.
void pair_keys(int n, int rank, const std::vector<int>& rows, const std::vector<int>& colsT,
               int a, int b, std::vector<std::uint64_t>& out) {
    out.resize(static_cast<std::size_t>(n));
    const int* ra = rows.data() + static_cast<std::size_t>(a) * n;
    const int* cb = colsT.data() + static_cast<std::size_t>(b) * n;
    for (int g = 0; g < n; ++g)
        out[static_cast<std::size_t>(g)] = static_cast<std::uint64_t>(ra[g]) * rank + cb[g];
    std::sort(out.begin(), out.end());
}

std::vector<int> transpose_colors(int n, const std::vector<int>& colors) {
    std::vector<int> t(colors.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[static_cast<std::size_t>(b) * n + a] = colors[static_cast<std::size_t>(a) * n + b];
    return t;
}

} // namespace

std::vector<int> CoherentConfiguration::neighbors(int alpha, int s) const {
    std::vector<int> out;
    const int* row = colors.data() + static_cast<std::size_t>(alpha) * n;
    for (int b = 0; b < n; ++b)
        if (row[b] == s) out.push_back(b);
    return out;
}

CoherentConfiguration from_color_matrix(int n, std::vector<int> colors) {
    if (n <= 0) throw ValidationError("shape", n, -1, -1, "configuration must have at least one point");
    if (colors.size() != static_cast<std::size_t>(n) * n)
        throw ValidationError("shape", n, static_cast<long>(colors.size()), -1,
                              "color matrix is not n x n");

    int rank = 0;
    for (int c : colors) {
        if (c < 0)
            throw ValidationError("color-range", c, -1, -1, "negative color index");
        rank = std::max(rank, c + 1);
    }
    std::vector<char> seen(static_cast<std::size_t>(rank), 0);
    for (int c : colors) seen[static_cast<std::size_t>(c)] = 1;
    for (int c = 0; c < rank; ++c)
        if (!seen[static_cast<std::size_t>(c)])
            throw ValidationError("color-range", c, -1, -1,
                                  "color indices are not contiguous: " + std::to_string(c) + " unused");

    CoherentConfiguration x;
    x.n = n;
    x.rank = rank;
    x.colors = std::move(colors);

    // Diagonal relations must not occur off the diagonal.
    std::vector<char> on_diag(static_cast<std::size_t>(rank), 0);
    for (int a = 0; a < n; ++a) on_diag[static_cast<std::size_t>(x.color(a, a))] = 1;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && on_diag[static_cast<std::size_t>(x.color(a, b))])
                throw ValidationError("diagonal-split", a, b, x.color(a, b),
                                      "diagonal color " + std::to_string(x.color(a, b)) +
                                          " reused off the diagonal at (" + std::to_string(a) + "," +
                                          std::to_string(b) + ")");
    x.reflexive.assign(static_cast<std::size_t>(rank), 0);
    for (int c = 0; c < rank; ++c) x.reflexive[static_cast<std::size_t>(c)] = on_diag[static_cast<std::size_t>(c)];

    // Converse must be a single relation per color.
    x.converse.assign(static_cast<std::size_t>(rank), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int r = x.color(a, b);
            int s = x.color(b, a);
            int& cr = x.converse[static_cast<std::size_t>(r)];
            if (cr == -1)
                cr = s;
            else if (cr != s)
                throw ValidationError("converse", a, b, r,
                                      "relation " + std::to_string(r) + " has no single converse (pair (" +
                                          std::to_string(a) + "," + std::to_string(b) + "))");
        }
    }

    // First pair of each relation in row-major order.
    x.rep.assign(static_cast<std::size_t>(rank), {-1, -1});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int c = x.color(a, b);
            if (x.rep[static_cast<std::size_t>(c)].first == -1) x.rep[static_cast<std::size_t>(c)] = {a, b};
        }

    // Coherence: the multiset of (color(a,g), color(g,b)) over g must be
    // constant over the pairs (a,b) of each relation.
    {
        std::vector<int> colsT = transpose_colors(n, x.colors);
        std::vector<std::vector<std::pair<int, int>>> by_color(static_cast<std::size_t>(rank));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                by_color[static_cast<std::size_t>(x.color(a, b))].push_back({a, b});

        std::vector<std::uint64_t> ref, cur;
        for (int t = 0; t < rank; ++t) {
            const auto& pairs = by_color[static_cast<std::size_t>(t)];
            pair_keys(n, rank, x.colors, colsT, pairs[0].first, pairs[0].second, ref);
            for (std::size_t i = 1; i < pairs.size(); ++i) {
                pair_keys(n, rank, x.colors, colsT, pairs[i].first, pairs[i].second, cur);
                if (cur != ref) {
                    std::size_t k = 0;
                    while (k < cur.size() && cur[k] == ref[k]) ++k;
                    std::uint64_t key = k < cur.size() ? cur[k] : ref[k];
                    int r = static_cast<int>(key / rank);
                    int s = static_cast<int>(key % rank);
                    throw ValidationError("coherence", r, s, t,
                                          "intersection number for (r,s,t)=(" + std::to_string(r) + "," +
                                              std::to_string(s) + "," + std::to_string(t) +
                                              ") is not constant over relation " + std::to_string(t));
                }
            }
        }
    }

    // Fibers from the diagonal relations, ids in order of least point.
    x.fiber_of.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> fiber_of_color(static_cast<std::size_t>(rank), -1);
    for (int a = 0; a < n; ++a) {
        int c = x.color(a, a);
        int& f = fiber_of_color[static_cast<std::size_t>(c)];
        if (f == -1) {
            f = static_cast<int>(x.fibers.size());
            x.fibers.push_back({});
        }
        x.fiber_of[static_cast<std::size_t>(a)] = f;
        x.fibers[static_cast<std::size_t>(f)].push_back(a);
    }

    // Valencies from representatives (constant by coherence).
    x.valency.assign(static_cast<std::size_t>(rank), 0);
    for (int c = 0; c < rank; ++c) {
        int a = x.rep[static_cast<std::size_t>(c)].first;
        const int* row = x.colors.data() + static_cast<std::size_t>(a) * n;
        std::int64_t v = 0;
        for (int b = 0; b < n; ++b)
            if (row[b] == c) ++v;
        x.valency[static_cast<std::size_t>(c)] = v;
    }

    return x;
}

std::int64_t intersection_number(const CoherentConfiguration& x, int r, int s, int t) {
    if (r < 0 || r >= x.rank || s < 0 || s >= x.rank || t < 0 || t >= x.rank)
        throw Error("relation index out of range");
    auto [a, b] = x.rep[static_cast<std::size_t>(t)];
    const int* ra = x.colors.data() + static_cast<std::size_t>(a) * x.n;
    std::int64_t count = 0;
    for (int g = 0; g < x.n; ++g)
        if (ra[g] == r && x.color(g, b) == s) ++count;
    return count;
}

IntersectionTensor full_tensor(const CoherentConfiguration& x) {
    IntersectionTensor tensor;
    tensor.rank = x.rank;
    std::vector<int> colsT = transpose_colors(x.n, x.colors);
    std::vector<std::uint64_t> keys;
    for (int t = 0; t < x.rank; ++t) {
        auto [a, b] = x.rep[static_cast<std::size_t>(t)];
        pair_keys(x.n, x.rank, x.colors, colsT, a, b, keys);
        std::size_t i = 0;
        while (i < keys.size()) {
            std::size_t j = i;
            while (j < keys.size() && keys[j] == keys[i]) ++j;
            int r = static_cast<int>(keys[i] / x.rank);
            int s = static_cast<int>(keys[i] % x.rank);
            tensor.entries[tensor.key(r, s, t)] = static_cast<std::int64_t>(j - i);
            i = j;
        }
    }
    return tensor;
}

std::int64_t indistinguishing_number(const CoherentConfiguration& x, int s) {
    if (s < 0 || s >= x.rank) throw Error("relation index out of range");
    if (x.reflexive[static_cast<std::size_t>(s)])
        throw Error("indistinguishing number is defined for irreflexive relations only");
    auto [a, b] = x.rep[static_cast<std::size_t>(s)];
    // sum over r of c_{r r*}^s: count g with color(g,b) the converse of color(a,g)
    std::int64_t total = 0;
    for (int g = 0; g < x.n; ++g) {
        int r = x.color(a, g);
        if (x.color(g, b) == x.converse[static_cast<std::size_t>(r)]) ++total;
    }
    return total;
}

std::int64_t max_indistinguishing(const CoherentConfiguration& x) {
    std::int64_t best = -1;
    for (int s = 0; s < x.rank; ++s)
        if (!x.reflexive[static_cast<std::size_t>(s)])
            best = std::max(best, indistinguishing_number(x, s));
    if (best < 0) throw Error("configuration has no irreflexive relation");
    return best;
}

std::int64_t indistinguishing_direct_count(const CoherentConfiguration& x, int alpha, int beta) {
    std::int64_t count = 0;
    for (int g = 0; g < x.n; ++g)
        if (x.color(g, alpha) == x.color(g, beta)) ++count;
    return count;
}

std::vector<int> complex_product(const CoherentConfiguration& x, int r, int s) {
    if (r < 0 || r >= x.rank || s < 0 || s >= x.rank) throw Error("relation index out of range");
    std::vector<char> hit(static_cast<std::size_t>(x.rank), 0);
    int a = x.rep[static_cast<std::size_t>(r)].first;
    for (int g : x.neighbors(a, r))
        for (int b : x.neighbors(g, s))
            hit[static_cast<std::size_t>(x.color(a, b))] = 1;
    std::vector<int> out;
    for (int t = 0; t < x.rank; ++t)
        if (hit[static_cast<std::size_t>(t)]) out.push_back(t);
    return out;
}

CoherentConfiguration restrict_at_singleton(const CoherentConfiguration& x, int alpha) {
    if (alpha < 0 || alpha >= x.n) throw Error("point out of range");
    if (x.fibers[static_cast<std::size_t>(x.fiber_of[static_cast<std::size_t>(alpha)])].size() != 1)
        throw Error("point " + std::to_string(alpha) + " is not a singleton fiber");
    int m = x.n - 1;
    std::vector<int> sub(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < x.n; ++a) {
        if (a == alpha) continue;
        int na = a < alpha ? a : a - 1;
        for (int b = 0; b < x.n; ++b) {
            if (b == alpha) continue;
            int nb = b < alpha ? b : b - 1;
            sub[static_cast<std::size_t>(na) * m + nb] = x.color(a, b);
        }
    }
    // squeeze unused indices, then canonicalize
    std::vector<int> remap(static_cast<std::size_t>(x.rank), -1);
    int next = 0;
    for (int& c : sub) {
        if (remap[static_cast<std::size_t>(c)] == -1) remap[static_cast<std::size_t>(c)] = next++;
        c = remap[static_cast<std::size_t>(c)];
    }
    return from_color_matrix_canonical(m, std::move(sub));
}

std::int64_t max_valency(const CoherentConfiguration& x) {
    return *std::max_element(x.valency.begin(), x.valency.end());
}

const std::vector<std::int64_t>& valencies(const CoherentConfiguration& x) { return x.valency; }

std::vector<int> canonical_color_order(int n, const std::vector<int>& colors) {
    int rank = *std::max_element(colors.begin(), colors.end()) + 1;
    // first row-major occurrence and reflexivity per color
    std::vector<std::int64_t> first(static_cast<std::size_t>(rank), -1);
    std::vector<char> refl(static_cast<std::size_t>(rank), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int c = colors[static_cast<std::size_t>(a) * n + b];
            if (first[static_cast<std::size_t>(c)] == -1)
                first[static_cast<std::size_t>(c)] = static_cast<std::int64_t>(a) * n + b;
            if (a == b) refl[static_cast<std::size_t>(c)] = 1;
        }
    std::vector<int> order(static_cast<std::size_t>(rank));
    for (int c = 0; c < rank; ++c) order[static_cast<std::size_t>(c)] = c;
    std::sort(order.begin(), order.end(), [&](int u, int v) {
        if (refl[static_cast<std::size_t>(u)] != refl[static_cast<std::size_t>(v)])
            return refl[static_cast<std::size_t>(u)] > refl[static_cast<std::size_t>(v)];
        return first[static_cast<std::size_t>(u)] < first[static_cast<std::size_t>(v)];
    });
    std::vector<int> relabel(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) relabel[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<int> out(colors.size());
    for (std::size_t i = 0; i < colors.size(); ++i) out[i] = relabel[static_cast<std::size_t>(colors[i])];
    return out;
}

CoherentConfiguration from_color_matrix_canonical(int n, std::vector<int> colors) {
    return from_color_matrix(n, canonical_color_order(n, colors));
}

bool same_partition(const CoherentConfiguration& a, const CoherentConfiguration& b) {
    if (a.n != b.n || a.rank != b.rank) return false;
    std::vector<int> a2b(static_cast<std::size_t>(a.rank), -1);
    std::vector<int> b2a(static_cast<std::size_t>(b.rank), -1);
    for (std::size_t i = 0; i < a.colors.size(); ++i) {
        int ca = a.colors[i], cb = b.colors[i];
        if (a2b[static_cast<std::size_t>(ca)] == -1) a2b[static_cast<std::size_t>(ca)] = cb;
        else if (a2b[static_cast<std::size_t>(ca)] != cb) return false;
        if (b2a[static_cast<std::size_t>(cb)] == -1) b2a[static_cast<std::size_t>(cb)] = ca;
        else if (b2a[static_cast<std::size_t>(cb)] != ca) return false;
    }
    return true;
}

CoherentConfiguration trivial_scheme(int n) {
    if (n < 1) throw Error("degree must be positive");
    std::vector<int> colors(static_cast<std::size_t>(n) * n, 1);
    for (int a = 0; a < n; ++a) colors[static_cast<std::size_t>(a) * n + a] = 0;
    return from_color_matrix(n, std::move(colors));
}

CoherentConfiguration discrete_configuration(int n) {
    if (n < 1) throw Error("degree must be positive");
    std::vector<int> colors(static_cast<std::size_t>(n) * n);
    for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = static_cast<int>(i);
    return from_color_matrix_canonical(n, std::move(colors));
}

} // namespace cckit
