#include "cckit/couples.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "cckit/errors.hpp"

namespace cckit {

CoupleContext::CoupleContext(const CoherentConfiguration& x) : x_(&x), tensor_(full_tensor(x)) {
    const int rank = x.rank;
    words_ = (rank + 63) / 64;
    product_masks_.assign(static_cast<std::size_t>(rank) * rank * words_, 0);
    for (const auto& [key, count] : tensor_.entries) {
        (void)count;
        int t = static_cast<int>(key % rank);
        int s = static_cast<int>(key / rank % rank);
        int r = static_cast<int>(key / rank / rank);
        product_masks_[(static_cast<std::size_t>(r) * rank + s) * words_ + t / 64] |=
            std::uint64_t{1} << (t % 64);
    }
}

bool CoupleContext::product_contains(int r, int s, int t) const {
    return (mask(r, s)[t / 64] >> (t % 64)) & 1;
}

std::vector<int> CoupleContext::product(int r, int s) const {
    std::vector<int> out;
    const std::uint64_t* m = mask(r, s);
    for (int t = 0; t < x_->rank; ++t)
        if ((m[t / 64] >> (t % 64)) & 1) out.push_back(t);
    return out;
}

bool CoupleContext::arrow(int mu, int a, int b) const {
    int x = x_->color(mu, a);
    int r = x_->color(a, b);
    int y = x_->color(mu, b);
    return tensor_.get(x, r, y) == 1;
}

bool CoupleContext::arrow_weak(int mu, int a, int b) const { return arrow(mu, a, b) || arrow(mu, b, a); }

Couple CoupleContext::couple_at(int mu, int a, int b, int g) const {
    Couple q;
    q.x = x_->color(mu, a);
    q.y = x_->color(mu, b);
    q.z = x_->color(mu, g);
    q.r = x_->color(a, b);
    q.s = x_->color(b, g);
    q.t = x_->color(g, a);
    return q;
}

Couple CoupleContext::make_couple(int x, int y, int z, int r, int s, int t) const {
    const auto& conv = x_->converse;
    if (!product_contains(conv[static_cast<std::size_t>(x)], y, r) ||
        !product_contains(conv[static_cast<std::size_t>(y)], z, s) ||
        !product_contains(conv[static_cast<std::size_t>(z)], x, t))
        throw Error("relation triangles do not form a couple");
    return Couple{x, y, z, r, s, t};
}

std::optional<CoupleContext::Extension> CoupleContext::find_couple_extension(
    const Couple& q, std::optional<int> mu) const {
    const auto& x = *x_;
    const auto& conv = x.converse;

    std::vector<char> row_has(static_cast<std::size_t>(x.rank), 1);
    if (mu) {
        std::fill(row_has.begin(), row_has.end(), 0);
        const int* row = x.colors.data() + static_cast<std::size_t>(*mu) * x.n;
        for (int b = 0; b < x.n; ++b) row_has[static_cast<std::size_t>(row[b])] = 1;
    }

    auto cut_is_single = [&](int u, int v, int ubar, int vbar, int expect) {
        // complex products u*v and ubar*vbar must intersect exactly in {expect}
        const std::uint64_t* m1 = mask(conv[static_cast<std::size_t>(u)], v);
        const std::uint64_t* m2 = mask(conv[static_cast<std::size_t>(ubar)], vbar);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t inter = m1[w] & m2[w];
            std::uint64_t want = (expect / 64 == w) ? (std::uint64_t{1} << (expect % 64)) : 0;
            if (inter != want) return false;
        }
        return true;
    };

    for (int m = 0; m < x.rank; ++m) {
        if (!row_has[static_cast<std::size_t>(m)]) continue;
        int mc = conv[static_cast<std::size_t>(m)];
        for (int xbar : product(mc, q.x)) {
            for (int ybar : product(mc, q.y)) {
                if (!cut_is_single(q.x, q.y, xbar, ybar, q.r)) continue;
                for (int zbar : product(mc, q.z)) {
                    if (!cut_is_single(q.y, q.z, ybar, zbar, q.s)) continue;
                    if (!cut_is_single(q.z, q.x, zbar, xbar, q.t)) continue;
                    return Extension{m, xbar, ybar, zbar};
                }
            }
        }
    }
    return std::nullopt;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::holds_on_sample: return "holds-on-sample";
        case Verdict::fails: return "fails";
        case Verdict::skipped: return "skipped";
    }
    return "?";
}

namespace {

// arrow bitmaps: covered_by[l] has bit d set when d <- l at the base point
struct ArrowTable {
    int n;
    int words;
    std::vector<std::uint64_t> bits;

    ArrowTable(const CoupleContext& ctx, int mu) : n(ctx.config().n), words((n + 63) / 64) {
        bits.assign(static_cast<std::size_t>(n) * words, 0);
        for (int l = 0; l < n; ++l)
            for (int d = 0; d < n; ++d)
                if (ctx.arrow(mu, d, l))
                    bits[static_cast<std::size_t>(l) * words + d / 64] |= std::uint64_t{1} << (d % 64);
    }

    bool covers(int l, const std::vector<int>& delta) const {
        const std::uint64_t* row = bits.data() + static_cast<std::size_t>(l) * words;
        for (int d : delta)
            if (!((row[d / 64] >> (d % 64)) & 1)) return false;
        return true;
    }
};

bool some_point_covers(const ArrowTable& table, const std::vector<int>& delta, int n) {
    for (int l = 0; l < n; ++l)
        if (table.covers(l, delta)) return true;
    return false;
}

} // namespace

ConditionReport check_separability_conditions(const CoherentConfiguration& x, int mu,
                                              const ConditionOptions& opts) {
    if (mu < 0 || mu >= x.n) throw Error("base point out of range");
    CoupleContext ctx(x);
    ConditionReport report;
    report.mu = mu;

    const int n = x.n;
    const bool full = n <= opts.full_enum_max_n;
    report.sampled = !full;
    ArrowTable table(ctx, mu);

    // covering condition: sets by increasing size, then lexicographic
    {
        const int max_size = std::min(opts.delta_size, n);
        bool failed = false;
        if (full) {
            std::vector<int> delta;
            for (int size = 1; size <= max_size && !failed; ++size) {
                delta.assign(static_cast<std::size_t>(size), 0);
                std::vector<int> idx(static_cast<std::size_t>(size));
                for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
                for (;;) {
                    for (int i = 0; i < size; ++i)
                        delta[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i)];
                    ++report.sets_checked;
                    if (!some_point_covers(table, delta, n)) {
                        report.covering = Verdict::fails;
                        report.covering_witness = delta;
                        failed = true;
                        break;
                    }
                    int i = size - 1;
                    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i) --i;
                    if (i < 0) break;
                    ++idx[static_cast<std::size_t>(i)];
                    for (int j = i + 1; j < size; ++j)
                        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
                }
            }
            if (!failed) report.covering = Verdict::holds;
        } else if (opts.sample_sets <= 0) {
            report.covering = Verdict::skipped;
        } else {
            std::mt19937_64 rng(opts.seed);
            std::uniform_int_distribution<int> point(0, n - 1);
            for (std::int64_t it = 0; it < opts.sample_sets && !failed; ++it) {
                std::vector<int> delta;
                for (int i = 0; i < max_size; ++i) delta.push_back(point(rng));
                std::sort(delta.begin(), delta.end());
                delta.erase(std::unique(delta.begin(), delta.end()), delta.end());
                ++report.sets_checked;
                if (!some_point_covers(table, delta, n)) {
                    report.covering = Verdict::fails;
                    report.covering_witness = delta;
                    failed = true;
                }
            }
            if (!failed) report.covering = Verdict::holds_on_sample;
        }
    }

    // extension condition: every couple at mu extendable with row-mu relation
    {
        std::unordered_map<std::uint64_t, bool> cache;
        auto couple_ok = [&](int a, int b, int g) {
            Couple q = ctx.couple_at(mu, a, b, g);
            std::uint64_t key = 0;
            for (int comp : {q.x, q.y, q.z, q.r, q.s, q.t})
                key = key * static_cast<std::uint64_t>(x.rank) + static_cast<std::uint64_t>(comp);
            auto it = cache.find(key);
            if (it != cache.end()) return it->second;
            bool ok = ctx.find_couple_extension(q, mu).has_value();
            cache.emplace(key, ok);
            return ok;
        };

        bool failed = false;
        if (full) {
            for (int a = 0; a < n && !failed; ++a)
                for (int b = 0; b < n && !failed; ++b)
                    for (int g = 0; g < n && !failed; ++g) {
                        ++report.triples_checked;
                        if (!couple_ok(a, b, g)) {
                            report.extension = Verdict::fails;
                            report.extension_witness = {a, b, g};
                            failed = true;
                        }
                    }
            if (!failed) report.extension = Verdict::holds;
        } else if (opts.sample_triples <= 0) {
            report.extension = Verdict::skipped;
        } else {
            std::mt19937_64 rng(opts.seed ^ 0xabcdef123456789ULL);
            std::uniform_int_distribution<int> point(0, n - 1);
            for (std::int64_t it = 0; it < opts.sample_triples && !failed; ++it) {
                int a = point(rng), b = point(rng), g = point(rng);
                ++report.triples_checked;
                if (!couple_ok(a, b, g)) {
                    report.extension = Verdict::fails;
                    report.extension_witness = {a, b, g};
                    failed = true;
                }
            }
            if (!failed) report.extension = Verdict::holds_on_sample;
        }
    }

    return report;
}

bool arrow_valency_monotone(const CoherentConfiguration& x) {
    IntersectionTensor tensor = full_tensor(x);
    for (const auto& [key, count] : tensor.entries) {
        if (count != 1) continue;
        int y = static_cast<int>(key % x.rank);
        int xx = static_cast<int>(key / x.rank / x.rank);
        if (x.valency[static_cast<std::size_t>(xx)] > x.valency[static_cast<std::size_t>(y)])
            return false;
    }
    // arrows out of maximal-valency relations are symmetric
    std::int64_t k = max_valency(x);
    CoupleContext ctx(x);
    for (int mu = 0; mu < x.n; ++mu)
        for (int a = 0; a < x.n; ++a) {
            if (x.valency[static_cast<std::size_t>(x.color(mu, a))] != k) continue;
            for (int b = 0; b < x.n; ++b)
                if (ctx.arrow(mu, a, b) && !ctx.arrow(mu, b, a)) return false;
        }
    return true;
}

} // namespace cckit
