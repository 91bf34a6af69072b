#include "cckit/iso.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "cckit/errors.hpp"

namespace cckit {

namespace {

// Backtracking over points: find bijections f with
// target.color(f(a), f(b)) == phi[source.color(a, b)] for all a, b.
// Seeded assignments are honored; candidates are tried in ascending order,
// so enumeration order is deterministic.
class PointSearch {
public:
    PointSearch(const CoherentConfiguration& src, const CoherentConfiguration& dst,
                const std::vector<int>& phi, const Budget& budget)
        : src_(src), dst_(dst), phi_(phi), node_budget_(budget.search_nodes) {
        order_ = point_order(src_);
    }

    // callback returns false to stop the search
    void run(const std::vector<std::pair<int, int>>& seeds,
             const std::function<bool(const std::vector<int>&)>& on_found) {
        const int n = src_.n;
        image_.assign(static_cast<std::size_t>(n), -1);
        used_.assign(static_cast<std::size_t>(n), 0);
        assigned_.clear();
        for (auto [v, w] : seeds) {
            if (image_[static_cast<std::size_t>(v)] == w) continue; // repeated seed
            if (image_[static_cast<std::size_t>(v)] != -1 || used_[static_cast<std::size_t>(w)])
                return; // inconsistent seed
            if (!compatible(v, w)) return;
            image_[static_cast<std::size_t>(v)] = w;
            used_[static_cast<std::size_t>(w)] = 1;
            assigned_.push_back(v);
        }
        todo_.clear();
        for (int v : order_)
            if (image_[static_cast<std::size_t>(v)] == -1) todo_.push_back(v);
        stop_ = false;
        on_found_ = &on_found;
        descend(0);
    }

private:
    static std::vector<int> point_order(const CoherentConfiguration& x) {
        // fiber size, then row-color fingerprint, then index
        std::map<std::vector<int>, int> fp_ids;
        std::vector<int> fp(static_cast<std::size_t>(x.n));
        for (int a = 0; a < x.n; ++a) {
            std::vector<int> row(x.colors.begin() + static_cast<std::size_t>(a) * x.n,
                                 x.colors.begin() + static_cast<std::size_t>(a + 1) * x.n);
            std::sort(row.begin(), row.end());
            fp[static_cast<std::size_t>(a)] =
                fp_ids.try_emplace(std::move(row), static_cast<int>(fp_ids.size())).first->second;
        }
        std::vector<int> order(static_cast<std::size_t>(x.n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            std::size_t fa = x.fibers[static_cast<std::size_t>(x.fiber_of[static_cast<std::size_t>(a)])].size();
            std::size_t fb = x.fibers[static_cast<std::size_t>(x.fiber_of[static_cast<std::size_t>(b)])].size();
            if (fa != fb) return fa < fb;
            return fp[static_cast<std::size_t>(a)] < fp[static_cast<std::size_t>(b)];
        });
        return order;
    }

    bool compatible(int v, int w) const {
        if (dst_.color(w, w) != phi_[static_cast<std::size_t>(src_.color(v, v))]) return false;
        for (int u : assigned_) {
            int fu = image_[static_cast<std::size_t>(u)];
            if (dst_.color(fu, w) != phi_[static_cast<std::size_t>(src_.color(u, v))]) return false;
            if (dst_.color(w, fu) != phi_[static_cast<std::size_t>(src_.color(v, u))]) return false;
        }
        return true;
    }

    void descend(std::size_t depth) {
        if (stop_) return;
        if (depth == todo_.size()) {
            if (!(*on_found_)(image_)) stop_ = true;
            return;
        }
        int v = todo_[depth];
        for (int w = 0; w < dst_.n && !stop_; ++w) {
            if (used_[static_cast<std::size_t>(w)]) continue;
            if (--node_budget_ < 0) throw BudgetError("point search exceeded node budget");
            if (!compatible(v, w)) continue;
            image_[static_cast<std::size_t>(v)] = w;
            used_[static_cast<std::size_t>(w)] = 1;
            assigned_.push_back(v);
            descend(depth + 1);
            assigned_.pop_back();
            used_[static_cast<std::size_t>(w)] = 0;
            image_[static_cast<std::size_t>(v)] = -1;
        }
    }

    const CoherentConfiguration& src_;
    const CoherentConfiguration& dst_;
    const std::vector<int>& phi_;
    std::int64_t node_budget_;
    std::vector<int> order_, todo_, assigned_, image_;
    std::vector<char> used_;
    bool stop_ = false;
    const std::function<bool(const std::vector<int>&)>* on_found_ = nullptr;
};

std::vector<int> identity_map(int rank) {
    std::vector<int> id(static_cast<std::size_t>(rank));
    std::iota(id.begin(), id.end(), 0);
    return id;
}

} // namespace

PermGroup automorphism_group(const CoherentConfiguration& x, const Budget& budget) {
    std::vector<int> id = identity_map(x.rank);
    PointSearch search(x, x, id, budget);
    std::vector<std::vector<int>> found;
    search.run({}, [&](const std::vector<int>& f) {
        found.push_back(f);
        return true;
    });

    PermGroup g;
    g.degree = x.n;
    g.elements = found;
    g.order = static_cast<std::int64_t>(found.size());

    // greedy generating set
    std::vector<int> idp(static_cast<std::size_t>(x.n));
    std::iota(idp.begin(), idp.end(), 0);
    auto closure_of = [&](const std::vector<std::vector<int>>& gens) {
        std::vector<std::vector<int>> elems{idp};
        std::vector<std::vector<int>> work{idp};
        auto contains = [&](const std::vector<int>& p) {
            return std::find(elems.begin(), elems.end(), p) != elems.end();
        };
        while (!work.empty()) {
            auto cur = std::move(work.back());
            work.pop_back();
            for (const auto& gen : gens) {
                std::vector<int> nxt(cur.size());
                for (std::size_t i = 0; i < cur.size(); ++i)
                    nxt[i] = gen[static_cast<std::size_t>(cur[i])];
                if (!contains(nxt)) {
                    elems.push_back(nxt);
                    work.push_back(std::move(nxt));
                }
            }
        }
        return elems;
    };
    std::vector<std::vector<int>> gens;
    std::vector<std::vector<int>> closed{idp};
    for (const auto& e : found) {
        if (std::find(closed.begin(), closed.end(), e) == closed.end()) {
            gens.push_back(e);
            closed = closure_of(gens);
        }
    }
    g.generators = std::move(gens);
    return g;
}

std::vector<AlgebraicMap> algebraic_isomorphisms(const CoherentConfiguration& x,
                                                 const CoherentConfiguration& y,
                                                 const Budget& budget) {
    std::vector<AlgebraicMap> out;
    if (x.rank != y.rank || x.n != y.n) return out;
    const int rank = x.rank;

    IntersectionTensor tx = full_tensor(x);
    IntersectionTensor ty = full_tensor(y);

    // per-relation fingerprints, invariant under algebraic isomorphisms
    auto fingerprints = [rank](const CoherentConfiguration& c, const IntersectionTensor& t) {
        std::vector<std::vector<std::pair<int, std::int64_t>>> fp(static_cast<std::size_t>(rank));
        for (const auto& [key, v] : t.entries) {
            int tt = static_cast<int>(key % rank);
            int ss = static_cast<int>(key / rank % rank);
            int rr = static_cast<int>(key / rank / rank);
            fp[static_cast<std::size_t>(rr)].push_back({0, v});
            fp[static_cast<std::size_t>(ss)].push_back({1, v});
            fp[static_cast<std::size_t>(tt)].push_back({2, v});
        }
        for (int r = 0; r < rank; ++r) {
            auto& f = fp[static_cast<std::size_t>(r)];
            f.push_back({3, c.valency[static_cast<std::size_t>(r)]});
            f.push_back({4, c.reflexive[static_cast<std::size_t>(r)]});
            f.push_back({5, c.converse[static_cast<std::size_t>(r)] == r});
            std::sort(f.begin(), f.end());
        }
        return fp;
    };
    auto fx = fingerprints(x, tx);
    auto fy = fingerprints(y, ty);

    // candidate targets per source relation
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(rank));
    for (int r = 0; r < rank; ++r) {
        for (int s = 0; s < rank; ++s)
            if (fx[static_cast<std::size_t>(r)] == fy[static_cast<std::size_t>(s)])
                candidates[static_cast<std::size_t>(r)].push_back(s);
        if (candidates[static_cast<std::size_t>(r)].empty()) return out;
    }

    // assignment order: reflexive relations first, then by index
    std::vector<int> order;
    for (int r = 0; r < rank; ++r)
        if (x.reflexive[static_cast<std::size_t>(r)]) order.push_back(r);
    for (int r = 0; r < rank; ++r)
        if (!x.reflexive[static_cast<std::size_t>(r)]) order.push_back(r);

    std::vector<int> phi(static_cast<std::size_t>(rank), -1);
    std::vector<char> used(static_cast<std::size_t>(rank), 0);
    std::vector<int> assigned;
    std::int64_t nodes = budget.search_nodes;

    // all tensor entries among assigned relations that involve r must match
    auto consistent = [&](int r) {
        for (int a : assigned)
            for (int b : assigned) {
                if (tx.get(r, a, b) != ty.get(phi[static_cast<std::size_t>(r)],
                                              phi[static_cast<std::size_t>(a)],
                                              phi[static_cast<std::size_t>(b)]))
                    return false;
                if (tx.get(a, r, b) != ty.get(phi[static_cast<std::size_t>(a)],
                                              phi[static_cast<std::size_t>(r)],
                                              phi[static_cast<std::size_t>(b)]))
                    return false;
                if (tx.get(a, b, r) != ty.get(phi[static_cast<std::size_t>(a)],
                                              phi[static_cast<std::size_t>(b)],
                                              phi[static_cast<std::size_t>(r)]))
                    return false;
            }
        return true;
    };

    std::function<void(std::size_t)> descend = [&](std::size_t depth) {
        if (depth == order.size()) {
            out.push_back(AlgebraicMap{phi});
            return;
        }
        int r = order[depth];
        if (phi[static_cast<std::size_t>(r)] != -1) { // forced earlier via converse
            descend(depth + 1);
            return;
        }
        int rc = x.converse[static_cast<std::size_t>(r)];
        for (int cand : candidates[static_cast<std::size_t>(r)]) {
            if (used[static_cast<std::size_t>(cand)]) continue;
            if (--nodes < 0) throw BudgetError("relation search exceeded node budget");
            int cand_conv = y.converse[static_cast<std::size_t>(cand)];
            if (rc == r && cand_conv != cand) continue;
            if (rc != r && (cand_conv == cand || used[static_cast<std::size_t>(cand_conv)])) continue;

            phi[static_cast<std::size_t>(r)] = cand;
            used[static_cast<std::size_t>(cand)] = 1;
            assigned.push_back(r);
            bool ok = consistent(r);
            if (ok && rc != r) {
                phi[static_cast<std::size_t>(rc)] = cand_conv;
                used[static_cast<std::size_t>(cand_conv)] = 1;
                assigned.push_back(rc);
                ok = consistent(rc);
            }
            if (ok) descend(depth + 1);
            if (rc != r && phi[static_cast<std::size_t>(rc)] != -1) {
                assigned.pop_back();
                used[static_cast<std::size_t>(cand_conv)] = 0;
                phi[static_cast<std::size_t>(rc)] = -1;
            }
            assigned.pop_back();
            used[static_cast<std::size_t>(cand)] = 0;
            phi[static_cast<std::size_t>(r)] = -1;
        }
    };
    descend(0);
    return out;
}

bool has_inducing_isomorphism(const CoherentConfiguration& x, const CoherentConfiguration& y,
                              const AlgebraicMap& map, const Budget& budget) {
    PointSearch search(x, y, map.phi, budget);
    bool found = false;
    search.run({}, [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

std::vector<std::vector<int>> isomorphisms(const CoherentConfiguration& x,
                                           const CoherentConfiguration& y, const Budget& budget) {
    std::vector<std::vector<int>> all;
    for (const auto& map : algebraic_isomorphisms(x, y, budget)) {
        PointSearch search(x, y, map.phi, budget);
        search.run({}, [&](const std::vector<int>& f) {
            all.push_back(f);
            return true;
        });
    }
    return all;
}

std::int64_t isomorphism_count(const CoherentConfiguration& x, const CoherentConfiguration& y,
                               const Budget& budget) {
    std::int64_t count = 0;
    for (const auto& map : algebraic_isomorphisms(x, y, budget)) {
        PointSearch search(x, y, map.phi, budget);
        search.run({}, [&](const std::vector<int>&) {
            ++count;
            return true;
        });
    }
    return count;
}

WitnessReport separability_witness(const CoherentConfiguration& x, const Budget& budget) {
    WitnessReport report;
    report.aut_order = automorphism_group(x, budget).order;
    auto aisos = algebraic_isomorphisms(x, x, budget);
    report.aiso_count = static_cast<std::int64_t>(aisos.size());
    std::int64_t induced = 0;
    for (const auto& map : aisos)
        if (has_inducing_isomorphism(x, x, map, budget)) ++induced;
    report.iso_count = report.aut_order * induced;
    report.ok = induced == report.aiso_count;
    return report;
}

bool is_schurian(const CoherentConfiguration& x, const Budget& budget) {
    const int n = x.n;
    std::vector<int> id = identity_map(x.rank);
    std::vector<std::vector<int>> gens;

    // orbit of a pair under the group generated so far
    std::vector<char> orbit(static_cast<std::size_t>(n) * n);
    auto fill_orbit = [&](int a0, int b0) {
        std::fill(orbit.begin(), orbit.end(), 0);
        std::vector<std::pair<int, int>> work{{a0, b0}};
        orbit[static_cast<std::size_t>(a0) * n + b0] = 1;
        while (!work.empty()) {
            auto [a, b] = work.back();
            work.pop_back();
            for (const auto& g : gens) {
                int na = g[static_cast<std::size_t>(a)], nb = g[static_cast<std::size_t>(b)];
                char& cell = orbit[static_cast<std::size_t>(na) * n + nb];
                if (!cell) {
                    cell = 1;
                    work.push_back({na, nb});
                }
            }
        }
    };

    for (int s = 0; s < x.rank; ++s) {
        auto [a0, b0] = x.rep[static_cast<std::size_t>(s)];
        fill_orbit(a0, b0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (x.color(a, b) != s || orbit[static_cast<std::size_t>(a) * n + b]) continue;
                // transporter: automorphism taking (a0,b0) to (a,b)
                PointSearch search(x, x, id, budget);
                bool found = false;
                std::vector<int> witness;
                search.run({{a0, a}, {b0, b}}, [&](const std::vector<int>& f) {
                    found = true;
                    witness = f;
                    return false;
                });
                if (!found) return false; // s splits into several orbits
                gens.push_back(std::move(witness));
                fill_orbit(a0, b0);
            }
    }
    return true;
}

} // namespace cckit
