#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cckit/config.hpp"

namespace cckit {

// Two relation triangles (x,y,z) and (r,s,t) with r in x*y, s in y*z,
// t in z*x (asterisk = converse); validated at construction.
struct Couple {
    int x = 0, y = 0, z = 0;
    int r = 0, s = 0, t = 0;
};

// Precomputed tensor + complex products of one configuration, shared by the
// couple machinery. Complex products are stored as bitmasks over relations.
class CoupleContext {
public:
    explicit CoupleContext(const CoherentConfiguration& x);

    const CoherentConfiguration& config() const { return *x_; }
    const IntersectionTensor& tensor() const { return tensor_; }

    // c_{xr}^y == 1 with x = color(mu,a), r = color(a,b), y = color(mu,b)
    bool arrow(int mu, int a, int b) const;
    // arrow in either direction (converse form)
    bool arrow_weak(int mu, int a, int b) const;

    Couple couple_at(int mu, int a, int b, int g) const;
    Couple make_couple(int x, int y, int z, int r, int s, int t) const; // validates

    // First (m, (xbar,ybar,zbar)) in canonical order extending the couple:
    // xbar in m*x, ybar in m*y, zbar in m*z with the three pairwise complex
    // products cut down to exactly {r}, {s}, {t}. When mu is given, only
    // relations m occurring in row mu are considered.
    struct Extension {
        int m;
        int xbar, ybar, zbar;
    };
    std::optional<Extension> find_couple_extension(const Couple& q,
                                                   std::optional<int> mu = std::nullopt) const;

    // membership and product helpers
    bool product_contains(int r, int s, int t) const;
    std::vector<int> product(int r, int s) const;

private:
    const CoherentConfiguration* x_;
    IntersectionTensor tensor_;
    int words_;
    std::vector<std::uint64_t> product_masks_; // (r*rank+s)*words .. bitmask over t
    const std::uint64_t* mask(int r, int s) const {
        return product_masks_.data() + (static_cast<std::size_t>(r) * x_->rank + s) * words_;
    }
};

enum class Verdict { holds, holds_on_sample, fails, skipped };

std::string to_string(Verdict v);

struct ConditionOptions {
    int delta_size = 4;       // max size of the point sets in the covering condition
    int full_enum_max_n = 40; // beyond this, sample instead of enumerating
    std::int64_t sample_sets = 100000;
    std::int64_t sample_triples = 100000;
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

// Outcome of the two sufficient conditions checked at a base point mu:
// (i) every point set of size <= delta_size is arrow-covered by some point,
// (ii) every couple at mu has an extension with respect to some relation
// occurring in row mu.
struct ConditionReport {
    int mu = 0;
    Verdict covering = Verdict::skipped;
    Verdict extension = Verdict::skipped;
    std::vector<int> covering_witness; // first failing point set, if any
    std::vector<int> extension_witness; // first failing triple (a,b,g), if any
    std::int64_t sets_checked = 0;
    std::int64_t triples_checked = 0;
    bool sampled = false;

    bool both_hold() const { return covering == Verdict::holds && extension == Verdict::holds; }
};

ConditionReport check_separability_conditions(const CoherentConfiguration& x, int mu,
                                              const ConditionOptions& opts = {});

// For every arrow c_{xr}^y == 1 the source valency must not exceed the
// target valency; additionally, arrows out of a maximal-valency relation are
// symmetric. Returns false only on broken inputs (this is a theorem).
bool arrow_valency_monotone(const CoherentConfiguration& x);

} // namespace cckit
