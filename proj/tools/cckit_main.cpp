#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cckit/builders.hpp"
#include "cckit/ccf.hpp"
#include "cckit/closure.hpp"
#include "cckit/couples.hpp"
#include "cckit/errors.hpp"
#include "cckit/iso.hpp"
#include "cckit/reports.hpp"
#include "cckit/separability.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;          // certified / valid
constexpr int kInconclusive = 1; // inconclusive / invalid
constexpr int kUsage = 2;
constexpr int kBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cckit::Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw cckit::Error("cannot write " + out_path);
        out << text;
    }
}

cckit::CoherentConfiguration load_config(const std::string& path) {
    return cckit::parse_ccf(read_file(path));
}

// first line: point count; following lines: one arc "u v" each
std::pair<int, std::vector<std::pair<int, int>>> read_graph(const std::string& path) {
    std::istringstream in(read_file(path));
    int n;
    if (!(in >> n) || n < 1) throw cckit::Error("graph file must start with the point count");
    std::vector<std::pair<int, int>> arcs;
    int u, v;
    while (in >> u >> v) arcs.push_back({u, v});
    if (!in.eof()) throw cckit::Error("malformed arc line in graph file");
    return {n, arcs};
}

cckit::PaleyKind parse_kind(const std::string& kind) {
    if (kind == "graph") return cckit::PaleyKind::graph;
    if (kind == "tournament") return cckit::PaleyKind::tournament;
    throw CLI::ValidationError("--kind must be graph or tournament");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coherent configurations, cyclotomic schemes, and separability analysis"};
    app.require_subcommand(1);
    int exit_code = kOk;

    // field-info
    {
        auto* cmd = app.add_subcommand("field-info", "parameters of GF(p^d)");
        auto p = std::make_shared<std::int64_t>();
        auto d = std::make_shared<std::int64_t>();
        cmd->add_option("p", *p, "characteristic")->required();
        cmd->add_option("d", *d, "degree")->required();
        cmd->callback([p, d]() {
            auto field = cckit::FiniteField::build(*p, *d);
            json j{{"type", "field"},
                   {"p", field.p()},
                   {"d", field.d()},
                   {"q", field.q()},
                   {"modulus", field.modulus()},
                   {"xi", field.primitive_element().index()},
                   {"xi_rep", field.primitive_element().rep()}};
            std::cout << j.dump() << "\n";
        });
    }

    // build
    {
        auto* cmd = app.add_subcommand("build", "construct a scheme and print its CCF document");
        auto what = std::make_shared<std::string>();
        auto a = std::make_shared<std::int64_t>(0);
        auto b = std::make_shared<std::int64_t>(0);
        auto c = std::make_shared<std::int64_t>(0);
        auto kind = std::make_shared<std::string>("");
        auto out = std::make_shared<std::string>("");
        cmd->add_option("what", *what, "cyclotomic | cscheme | paley | trivial | discrete")->required();
        cmd->add_option("a", *a, "p (cyclotomic/cscheme), q (paley), n (trivial/discrete)")->required();
        cmd->add_option("b", *b, "d (cyclotomic/cscheme)");
        cmd->add_option("c", *c, "subgroup index (cyclotomic)");
        cmd->add_option("--kind", *kind, "paley kind: graph|tournament");
        cmd->add_option("-o,--out", *out, "output file (default stdout)");
        cmd->callback([what, a, b, c, kind, out]() {
            cckit::CoherentConfiguration x;
            if (*what == "cyclotomic") {
                auto field = cckit::FiniteField::build(*a, *b);
                x = cckit::cyclotomic_scheme(field, cckit::multiplicative_subgroup(field, *c));
            } else if (*what == "cscheme") {
                x = cckit::c_scheme(cckit::FiniteField::build(*a, *b));
            } else if (*what == "paley") {
                cckit::PaleyKind k = kind->empty()
                                         ? (*a % 4 == 1 ? cckit::PaleyKind::graph : cckit::PaleyKind::tournament)
                                         : parse_kind(*kind);
                x = cckit::paley(*a, k).scheme;
            } else if (*what == "trivial") {
                x = cckit::trivial_scheme(static_cast<int>(*a));
            } else if (*what == "discrete") {
                x = cckit::discrete_configuration(static_cast<int>(*a));
            } else {
                throw CLI::ValidationError("unknown build target " + *what);
            }
            emit(cckit::write_ccf(x), *out);
        });
    }

    // validate
    {
        auto* cmd = app.add_subcommand("validate", "check a CCF file against the axioms");
        auto path = std::make_shared<std::string>();
        cmd->add_option("file", *path, "CCF file")->required();
        cmd->callback([path]() {
            auto x = load_config(*path);
            json j{{"type", "valid"}, {"n", x.n}, {"rank", x.rank}, {"fibers", x.fibers.size()}};
            std::cout << j.dump() << "\n";
        });
    }

    // analyze
    {
        auto* cmd = app.add_subcommand("analyze", "degree/valency/indistinguishing analysis");
        auto path = std::make_shared<std::string>();
        auto deep = std::make_shared<bool>(false);
        cmd->add_option("file", *path, "CCF file")->required();
        cmd->add_flag("--deep", *deep, "also run the direct condition checks");
        cmd->callback([path, deep, &exit_code]() {
            auto report = cckit::analyze(load_config(*path), *deep);
            std::cout << cckit::to_json(report).dump() << "\n";
            exit_code = report.certified() ? kOk : kInconclusive;
        });
    }

    // closure
    {
        auto* cmd = app.add_subcommand("closure", "coherent closure of a graph");
        auto path = std::make_shared<std::string>();
        auto undirected = std::make_shared<bool>(false);
        auto out = std::make_shared<std::string>("");
        cmd->add_option("graph", *path, "graph file: first line n, then arc lines 'u v'")->required();
        cmd->add_flag("--undirected", *undirected, "add the reverse of every arc");
        cmd->add_option("-o,--out", *out, "output file (default stdout)");
        cmd->callback([path, undirected, out]() {
            auto [n, arcs] = read_graph(*path);
            if (*undirected) {
                auto reversed = arcs;
                for (auto& [u, v] : reversed) std::swap(u, v);
                arcs.insert(arcs.end(), reversed.begin(), reversed.end());
                std::sort(arcs.begin(), arcs.end());
                arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
            }
            emit(cckit::write_ccf(cckit::graph_closure(arcs, n)), *out);
        });
    }

    // extend
    {
        auto* cmd = app.add_subcommand("extend", "point extension or tensor-square extension");
        auto path = std::make_shared<std::string>();
        auto point = std::make_shared<int>(-1);
        auto m = std::make_shared<int>(0);
        auto out = std::make_shared<std::string>("");
        cmd->add_option("file", *path, "CCF file")->required();
        cmd->add_option("--point", *point, "extend at this point");
        cmd->add_option("--m", *m, "extension dimension (2 only)");
        cmd->add_option("-o,--out", *out, "output file (default stdout)");
        cmd->callback([path, point, m, out]() {
            auto x = load_config(*path);
            cckit::CoherentConfiguration y;
            if (*point >= 0 && *m == 0)
                y = cckit::point_extension(x, *point);
            else if (*m != 0 && *point < 0)
                y = cckit::m_extension(x, *m);
            else
                throw CLI::ValidationError("give exactly one of --point or --m");
            emit(cckit::write_ccf(y), *out);
        });
    }

    // couples-check
    {
        auto* cmd = app.add_subcommand("couples-check", "verify the two separability conditions");
        auto path = std::make_shared<std::string>();
        auto mu = std::make_shared<int>(0);
        auto delta = std::make_shared<int>(4);
        cmd->add_option("file", *path, "CCF file")->required();
        cmd->add_option("--mu", *mu, "base point")->required();
        cmd->add_option("--delta-size", *delta, "max size of the covered point sets");
        cmd->callback([path, mu, delta, &exit_code]() {
            cckit::ConditionOptions opts;
            opts.delta_size = *delta;
            auto report = cckit::check_separability_conditions(load_config(*path), *mu, opts);
            std::cout << cckit::to_json(report).dump() << "\n";
            exit_code = report.both_hold() ? kOk : kInconclusive;
        });
    }

    // exceptional-table
    {
        auto* cmd = app.add_subcommand("exceptional-table", "pairs where the bound inequality fails");
        cmd->callback([]() {
            for (const auto& pair : cckit::exceptional_pairs())
                std::cout << cckit::to_json(pair).dump() << "\n";
        });
    }

    // two-sep
    {
        auto* cmd = app.add_subcommand("two-sep", "2-separability certificate for a cyclotomic scheme");
        auto p = std::make_shared<std::int64_t>();
        auto d = std::make_shared<std::int64_t>();
        auto idx = std::make_shared<std::int64_t>();
        cmd->add_option("p", *p, "characteristic")->required();
        cmd->add_option("d", *d, "degree")->required();
        cmd->add_option("m-index", *idx, "index of the subgroup M in the multiplicative group")->required();
        cmd->callback([p, d, idx, &exit_code]() {
            auto field = cckit::FiniteField::build(*p, *d);
            auto report = cckit::two_separability_report(field, cckit::multiplicative_subgroup(field, *idx));
            std::cout << cckit::to_json(report).dump() << "\n";
            exit_code = report.certified ? kOk : kInconclusive;
        });
    }

    // paley-bound
    {
        auto* cmd = app.add_subcommand("paley-bound", "Weisfeiler-Leman dimension bound for Paley graphs");
        auto q = std::make_shared<std::int64_t>();
        auto kind = std::make_shared<std::string>("");
        cmd->add_option("q", *q, "number of vertices")->required();
        cmd->add_option("--kind", *kind, "graph|tournament (default by q mod 4)");
        cmd->callback([q, kind, &exit_code]() {
            auto report = kind->empty() ? cckit::paley_wl_bound(*q)
                                        : cckit::paley_wl_bound(*q, parse_kind(*kind));
            std::cout << cckit::to_json(report).dump() << "\n";
            exit_code = report.bound ? kOk : kInconclusive;
        });
    }

    // aut
    {
        auto* cmd = app.add_subcommand("aut", "automorphism group");
        auto path = std::make_shared<std::string>();
        cmd->add_option("file", *path, "CCF file")->required();
        cmd->callback([path]() {
            auto g = cckit::automorphism_group(load_config(*path));
            json j{{"type", "aut"}, {"order", g.order}, {"generators", g.generators}};
            std::cout << j.dump() << "\n";
        });
    }

    // aiso
    {
        auto* cmd = app.add_subcommand("aiso", "algebraic isomorphisms between two configurations");
        auto pa = std::make_shared<std::string>();
        auto pb = std::make_shared<std::string>();
        cmd->add_option("fileA", *pa, "CCF file")->required();
        cmd->add_option("fileB", *pb, "CCF file")->required();
        cmd->callback([pa, pb, &exit_code]() {
            auto maps = cckit::algebraic_isomorphisms(load_config(*pa), load_config(*pb));
            json list = json::array();
            for (const auto& m : maps) list.push_back(m.phi);
            json j{{"type", "aiso"}, {"count", maps.size()}, {"maps", list}};
            std::cout << j.dump() << "\n";
            exit_code = maps.empty() ? kInconclusive : kOk;
        });
    }

    // witness
    {
        auto* cmd = app.add_subcommand("witness", "isomorphism/algebraic-automorphism counting witness");
        auto path = std::make_shared<std::string>();
        cmd->add_option("file", *path, "CCF file")->required();
        cmd->callback([path, &exit_code]() {
            auto report = cckit::separability_witness(load_config(*path));
            std::cout << cckit::to_json(report).dump() << "\n";
            exit_code = report.ok ? kOk : kInconclusive;
        });
    }

    // ingest
    {
        auto* cmd = app.add_subcommand("ingest", "read a catalog of configurations");
        auto path = std::make_shared<std::string>();
        auto format = std::make_shared<std::string>();
        auto strict = std::make_shared<bool>(false);
        cmd->add_option("catalog", *path, "catalog file")->required();
        cmd->add_option("--format", *format, "ccf-multi | matrix-list")->required();
        cmd->add_flag("--strict", *strict, "fail on the first invalid block");
        cmd->callback([path, format, strict, &exit_code]() {
            cckit::CatalogFormat f;
            if (*format == "ccf-multi")
                f = cckit::CatalogFormat::ccf_multi;
            else if (*format == "matrix-list")
                f = cckit::CatalogFormat::matrix_list;
            else
                throw CLI::ValidationError("--format must be ccf-multi or matrix-list");
            auto result = cckit::ingest_catalog(read_file(*path), f, *strict);
            int block = 1;
            std::size_t next_issue = 0;
            std::size_t config_idx = 0;
            int total = static_cast<int>(result.configs.size() + result.issues.size());
            for (; block <= total; ++block) {
                if (next_issue < result.issues.size() && result.issues[next_issue].block == block) {
                    json j{{"type", "ingest-block"},
                           {"block", block},
                           {"status", "invalid"},
                           {"message", result.issues[next_issue].message}};
                    std::cout << j.dump() << "\n";
                    ++next_issue;
                } else {
                    const auto& x = result.configs[config_idx++];
                    json j{{"type", "ingest-block"},
                           {"block", block},
                           {"status", "valid"},
                           {"n", x.n},
                           {"rank", x.rank}};
                    std::cout << j.dump() << "\n";
                }
            }
            exit_code = result.issues.empty() ? kOk : kInconclusive;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    } catch (const cckit::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInconclusive;
    }
    return exit_code;
}
