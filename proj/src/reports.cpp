#include "cckit/reports.hpp"

namespace cckit {

using nlohmann::json;

json to_json(const ConditionReport& r) {
    json j{{"type", "conditions"},
           {"mu", r.mu},
           {"covering", to_string(r.covering)},
           {"extension", to_string(r.extension)},
           {"sets_checked", r.sets_checked},
           {"triples_checked", r.triples_checked},
           {"sampled", r.sampled}};
    if (!r.covering_witness.empty()) j["covering_witness"] = r.covering_witness;
    if (!r.extension_witness.empty()) j["extension_witness"] = r.extension_witness;
    return j;
}

json to_json(const AnalysisReport& r) {
    json j{{"type", "analyze"},
           {"n", r.n},
           {"k", r.k},
           {"c", r.c},
           {"bound", r.bound.get_str()},
           {"margin", r.margin.get_str()},
           {"inequality", r.inequality},
           {"conclusion", to_string(r.conclusion)}};
    if (r.conditions) j["conditions"] = to_json(*r.conditions);
    return j;
}

json to_json(const ExceptionalPair& r) {
    return json{{"type", "exceptional-pair"},
                {"p", r.p},
                {"d", r.d},
                {"lhs", r.lhs.get_str()},
                {"rhs", r.rhs.get_str()}};
}

json to_json(const TwoSeparabilityReport& r) {
    return json{{"type", "two-sep"},
                {"p", r.p},
                {"d", r.d},
                {"q", r.q},
                {"subgroup_index", r.subgroup_index},
                {"subgroup_size", r.subgroup_size},
                {"fission_of_c_scheme", r.fission_of_c_scheme},
                {"exceptional", r.exceptional},
                {"restriction", to_json(r.restriction_analysis)},
                {"certified", r.certified},
                {"path", r.path}};
}

json to_json(const PaleyBoundReport& r) {
    json j{{"type", "paley-bound"},
           {"q", r.q},
           {"p", r.p},
           {"d", r.d},
           {"kind", r.kind == PaleyKind::graph ? "graph" : "tournament"},
           {"flags", r.flags}};
    if (r.bound)
        j["bound"] = *r.bound;
    else
        j["bound"] = "unknown";
    return j;
}

json to_json(const WitnessReport& r) {
    return json{{"type", "witness"},
                {"iso", r.iso_count},
                {"aut", r.aut_order},
                {"aiso", r.aiso_count},
                {"ok", r.ok}};
}

} // namespace cckit
