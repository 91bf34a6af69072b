#include "cckit/closure.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cckit/errors.hpp"

namespace cckit {

namespace {

// Dense relabel by first occurrence in row-major order, splitting diagonal
// colors from off-diagonal ones.
std::vector<int> normalize(const PairColoring& c) {
    std::map<std::pair<std::int64_t, bool>, int> ids;
    std::vector<int> out(c.color.size());
    for (int a = 0; a < c.n; ++a)
        for (int b = 0; b < c.n; ++b) {
            std::pair<std::int64_t, bool> key{c.at(a, b), a == b};
            auto [it, fresh] = ids.try_emplace(key, static_cast<int>(ids.size()));
            (void)fresh;
            out[static_cast<std::size_t>(a) * c.n + b] = it->second;
        }
    return out;
}

} // namespace

PairColoring PairColoring::filled(int n, std::int64_t value) {
    PairColoring c;
    c.n = n;
    c.color.assign(static_cast<std::size_t>(n) * n, value);
    return c;
}

CoherentConfiguration coherent_closure(const PairColoring& coloring, const Budget& budget) {
    const int n = coloring.n;
    if (n <= 0 || coloring.color.size() != static_cast<std::size_t>(n) * n)
        throw Error("pair coloring is not a square matrix");
    if (n > budget.max_closure_degree)
        throw BudgetError("closure degree " + std::to_string(n) + " exceeds budget " +
                          std::to_string(budget.max_closure_degree));

    std::vector<int> cur = normalize(coloring);
    int num_colors = *std::max_element(cur.begin(), cur.end()) + 1;

    std::vector<int> colsT(cur.size());
    std::vector<int> next(cur.size());
    std::vector<std::uint64_t> keys(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> sig;

    for (;;) {
        if (num_colors == n * n) break; // discrete: already stable
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                colsT[static_cast<std::size_t>(b) * n + a] = cur[static_cast<std::size_t>(a) * n + b];

        // signature (old color, run-length multiset) -> new color, numbered
        // by first occurrence
        std::map<std::vector<std::uint64_t>, int> ids;
        std::size_t stored = 0;
        for (int a = 0; a < n; ++a) {
            const int* ra = cur.data() + static_cast<std::size_t>(a) * n;
            for (int b = 0; b < n; ++b) {
                const int* cb = colsT.data() + static_cast<std::size_t>(b) * n;
                for (int g = 0; g < n; ++g)
                    keys[static_cast<std::size_t>(g)] =
                        static_cast<std::uint64_t>(ra[g]) * num_colors + cb[g];
                std::sort(keys.begin(), keys.end());
                sig.clear();
                sig.push_back(static_cast<std::uint64_t>(ra[b]));
                for (std::size_t i = 0; i < keys.size();) {
                    std::size_t j = i;
                    while (j < keys.size() && keys[j] == keys[i]) ++j;
                    sig.push_back(keys[i]);
                    sig.push_back(static_cast<std::uint64_t>(j - i));
                    i = j;
                }
                auto it = ids.find(sig);
                if (it == ids.end()) {
                    stored += sig.size();
                    if (stored > (std::size_t{1} << 25))
                        throw BudgetError("closure signature table exceeds the memory budget");
                    it = ids.emplace(sig, static_cast<int>(ids.size())).first;
                }
                next[static_cast<std::size_t>(a) * n + b] = it->second;
            }
        }
        int new_count = static_cast<int>(ids.size());
        cur.swap(next);
        if (new_count == num_colors) break;
        num_colors = new_count;
    }

    return from_color_matrix_canonical(n, std::move(cur));
}

CoherentConfiguration point_extension(const CoherentConfiguration& x, int alpha, const Budget& budget) {
    if (alpha < 0 || alpha >= x.n) throw Error("point out of range");
    PairColoring c;
    c.n = x.n;
    c.color.assign(x.colors.begin(), x.colors.end());
    c.at(alpha, alpha) = x.rank; // fresh color for the singleton
    return coherent_closure(c, budget);
}

bool is_fission(const CoherentConfiguration& y, const CoherentConfiguration& x) {
    if (y.n != x.n) throw Error("configurations have different degree");
    std::vector<int> to_coarse(static_cast<std::size_t>(y.rank), -1);
    for (std::size_t i = 0; i < y.colors.size(); ++i) {
        int cy = y.colors[i], cx = x.colors[i];
        int& m = to_coarse[static_cast<std::size_t>(cy)];
        if (m == -1)
            m = cx;
        else if (m != cx)
            return false;
    }
    // monotonicity of the two maxima under fission (theorem; cheap sanity check)
    if (max_valency(y) > max_valency(x))
        throw Error("fission check: refined configuration has larger maximal valency");
    bool y_irr = false, x_irr = false;
    for (int s = 0; s < y.rank; ++s) y_irr = y_irr || !y.reflexive[static_cast<std::size_t>(s)];
    for (int s = 0; s < x.rank; ++s) x_irr = x_irr || !x.reflexive[static_cast<std::size_t>(s)];
    if (y_irr && x_irr && max_indistinguishing(y) > max_indistinguishing(x))
        throw Error("fission check: refined configuration has larger indistinguishing number");
    return true;
}

CoherentConfiguration m_extension(const CoherentConfiguration& x, int m, const Budget& budget) {
    if (m != 2) throw Error("only the 2-extension is supported");
    if (x.n > budget.max_extension_degree)
        throw BudgetError("extension degree " + std::to_string(x.n) + " exceeds budget " +
                          std::to_string(budget.max_extension_degree));
    const int n = x.n;
    const int N = n * n; // extension points are pairs (a1,a2) = a1*n+a2
    PairColoring c;
    c.n = N;
    c.color.assign(static_cast<std::size_t>(N) * N, 0);
    for (int a1 = 0; a1 < n; ++a1)
        for (int a2 = 0; a2 < n; ++a2) {
            int P = a1 * n + a2;
            for (int b1 = 0; b1 < n; ++b1)
                for (int b2 = 0; b2 < n; ++b2) {
                    int Q = b1 * n + b2;
                    std::int64_t col =
                        static_cast<std::int64_t>(x.color(a1, b1)) * x.rank + x.color(a2, b2);
                    // pre-split the diagonal of Omega^2
                    if (P == Q && a1 == a2) col += static_cast<std::int64_t>(x.rank) * x.rank;
                    c.at(P, Q) = col;
                }
        }
    Budget b2 = budget;
    b2.max_closure_degree = std::max(b2.max_closure_degree, N);
    return coherent_closure(c, b2);
}

CoherentConfiguration graph_closure(const std::vector<std::pair<int, int>>& arcs, int n,
                                    const Budget& budget) {
    PairColoring c = PairColoring::filled(n, 2);
    for (int a = 0; a < n; ++a) c.at(a, a) = 0;
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw Error("arc endpoint out of range");
        if (u == v) throw Error("reflexive arc (" + std::to_string(u) + "," + std::to_string(u) + ")");
        c.at(u, v) = 1;
    }
    return coherent_closure(c, budget);
}

} // namespace cckit
