// Command-line front end: solving, gadget generation, decomposition,
// witness verification, degree refinement printing, and truncated covers.
//
// Exit codes: 0 yes/ok, 1 no/violations, 2 usage error, 3 resource or
// budget limit, 4 I/O or format error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "locham/brute_force.hpp"
#include "locham/covers.hpp"
#include "locham/decomposition.hpp"
#include "locham/dp.hpp"
#include "locham/equitable.hpp"
#include "locham/gadgets.hpp"
#include "locham/io.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitFormat = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw locham::ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw locham::ParseError("cannot write '" + path + "'");
    out << text;
}

locham::Variant variant_from(const std::string& name) {
    if (name == "hom")
        return locham::Variant::hom;
    if (name == "lb")
        return locham::Variant::lb;
    if (name == "li")
        return locham::Variant::li;
    if (name == "ls")
        return locham::Variant::ls;
    throw UsageError("unknown variant '" + name + "'");
}

double table_cap_from_env() {
    if (const char* raw = std::getenv("LOCHAM_TABLE_CAP")) {
        try {
            std::size_t used = 0;
            double cap = std::stod(raw, &used);
            if (used != std::string(raw).size() || cap <= 0)
                throw std::invalid_argument("range");
            return cap;
        } catch (const std::exception&) {
            throw UsageError("LOCHAM_TABLE_CAP must be a positive number, got '" +
                             std::string(raw) + "'");
        }
    }
    return locham::DPOptions{}.table_cap;
}

struct SolveSettings {
    locham::Variant variant = locham::Variant::hom;
    std::string method = "auto"; // bf | dp | tree-li | auto
    locham::SearchBudget budget;
    double table_cap = 1e8;
    std::string td_file; // optional, dp only
    bool explain = false;
    bool quiet = false;
    bool verbose = false;
};

bool guest_is_tree(const locham::Graph& g) {
    return g.vertex_count() > 0 && locham::is_connected(g) &&
           g.edge_count() == g.vertex_count() - 1;
}

// decide one connected guest/host pair with the requested method
locham::SolveResult solve_pair(const locham::Graph& guest, const locham::Graph& host,
                               const SolveSettings& s,
                               const locham::NiceTreeDecomposition* nice_opt) {
    using namespace locham;
    std::string method = s.method;
    if (method == "auto") {
        if (s.variant == Variant::li && guest_is_tree(guest))
            method = "tree-li";
        else {
            int k = 1;
            if (nice_opt) {
                for (const auto& node : nice_opt->nodes)
                    k = std::max(k, static_cast<int>(node.bag.size()));
            } else {
                TreeDecomposition td = heuristic_decomposition(guest, EliminationStrategy::min_degree);
                k = td.bags.empty() ? 0 : width(td) + 1;
            }
            method = dp_table_bound(host, k, s.variant) <= s.table_cap ? "dp" : "bf";
        }
    }

    if (s.verbose)
        std::cerr << "solving a " << guest.vertex_count() << "-vertex guest against a "
                  << host.vertex_count() << "-vertex host via " << method << "\n";
    if (method == "tree-li") {
        if (s.variant != Variant::li)
            throw UsageError("method tree-li only decides variant li");
        if (!guest_is_tree(guest))
            throw UsageError("method tree-li requires a tree guest");
        return tree_li_hom(guest, host);
    }
    if (method == "bf")
        return solve_bf(guest, host, s.variant, s.budget);
    if (method == "dp") {
        NiceTreeDecomposition nice;
        if (nice_opt)
            nice = *nice_opt;
        else
            nice = make_nice(guest,
                             heuristic_decomposition(guest, EliminationStrategy::min_degree));
        DPOptions options;
        options.table_cap = s.table_cap;
        switch (s.variant) {
        case Variant::hom: return solve_hom_dp(guest, host, nice, options);
        case Variant::lb: return solve_lb_dp(guest, host, nice, options);
        case Variant::li: return solve_li_dp(guest, host, nice, options);
        case Variant::ls: return solve_ls_dp(guest, host, nice, options);
        }
    }
    throw UsageError("unknown method '" + method + "'");
}

// component pairing: every guest component must map into some host component
int run_solve(const locham::Graph& guest, const locham::Graph& host, const SolveSettings& s,
              const std::string& witness_out) {
    using namespace locham;

    std::optional<NiceTreeDecomposition> nice;
    if (!s.td_file.empty()) {
        TreeDecomposition td = parse_td(slurp(s.td_file), guest);
        nice = make_nice(guest, td);
    }

    auto guest_comps = connected_components(guest);
    auto host_comps = connected_components(host);

    std::vector<int> image(guest.vertex_count() + 1, 0);
    bool all_mapped = true;
    bool budget_hit = false;
    std::ostringstream explain;

    if (guest_comps.size() == 1 && host_comps.size() == 1) {
        SolveResult out = solve_pair(guest, host, s, nice ? &*nice : nullptr);
        if (out.decision == Decision::budget_exceeded)
            budget_hit = true;
        else if (out.decision == Decision::no)
            all_mapped = false;
        else
            image = out.witness->image;
    } else {
        if (nice)
            throw UsageError("--td requires a connected guest; decompose components separately");
        for (std::size_t gi = 0; gi < guest_comps.size() && all_mapped && !budget_hit; ++gi) {
            auto [gsub, gold] = induced_subgraph(guest, guest_comps[gi]);
            bool mapped = false;
            for (std::size_t hi = 0; hi < host_comps.size() && !mapped; ++hi) {
                auto [hsub, hold] = induced_subgraph(host, host_comps[hi]);
                SolveResult out = solve_pair(gsub, hsub, s, nullptr);
                if (out.decision == Decision::budget_exceeded) {
                    budget_hit = true;
                    break;
                }
                if (out.decision == Decision::yes) {
                    mapped = true;
                    explain << "component " << gi + 1 << " -> host component " << hi + 1 << "\n";
                    for (int v = 1; v <= gsub.vertex_count(); ++v)
                        image[gold[v]] = hold[out.witness->image[v]];
                }
            }
            if (!mapped && !budget_hit) {
                all_mapped = false;
                explain << "component " << gi + 1 << " -> no host component\n";
            }
        }
    }

    if (budget_hit) {
        std::cout << "BUDGET\n";
        return kExitResource;
    }
    if (!all_mapped) {
        if (s.explain)
            std::cout << explain.str();
        std::cout << "NO\n";
        return kExitNo;
    }
    if (s.explain)
        std::cout << explain.str();
    std::cout << "YES\n";

    VertexMap witness{&guest, &host, image};
    if (guest.vertex_count() > 0) {
        if (!is_homomorphism(witness))
            throw locham::InternalError("assembled witness is not a homomorphism");
        if (auto mode = locality_of(s.variant))
            if (!check_local(witness, *mode).ok)
                throw locham::InternalError("assembled witness fails the locality check");
    }
    if (!witness_out.empty())
        spill(witness_out, write_witness(witness));
    return kExitYes;
}

int run_verify(const locham::Graph& guest, const locham::Graph& host,
               const locham::VertexMap& witness, locham::Variant variant) {
    using namespace locham;
    for (auto [u, v] : guest.edges())
        if (!host.has_edge(witness.image[u], witness.image[v])) {
            std::cout << "guest edge " << u << "-" << v << " maps to a host non-edge\n";
            return kExitNo;
        }
    if (auto mode = locality_of(variant)) {
        auto result = check_local(witness, *mode);
        if (!result.ok) {
            for (const auto& violation : result.violations)
                std::cout << violation.to_string() << "\n";
            return kExitNo;
        }
    }
    std::cout << "OK\n";
    return kExitYes;
}

int dispatch(int argc, char** argv) {
    using namespace locham;

    CLI::App app{"exact deciders for locally constrained graph homomorphisms"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "decide guest -> host for a variant");
    std::string variant_name = "hom", guest_file, host_file, method = "auto", td_file,
                witness_file;
    long long budget_ms = -1, budget_nodes = -1;
    bool explain = false, quiet = false, verbose = false;
    solve->add_option("--variant", variant_name, "hom | lb | li | ls")->required();
    solve->add_option("--guest", guest_file, "guest graph file")->required();
    solve->add_option("--host", host_file, "host graph file")->required();
    solve->add_option("--method", method, "bf | dp | tree-li | auto (default auto)");
    solve->add_option("--td", td_file, "tree decomposition of the guest (dp)");
    solve->add_option("--witness", witness_file, "write a witness here on YES");
    solve->add_option("--budget-ms", budget_ms, "wall-clock budget for bf");
    solve->add_option("--budget-nodes", budget_nodes, "search-node budget for bf");
    solve->add_flag("--explain", explain, "print the per-component pairing");
    solve->add_flag("--quiet", quiet, "suppress informational output");
    solve->add_flag("--verbose", verbose, "extra diagnostics");

    // generate
    auto* generate = app.add_subcommand("generate", "emit a hardness gadget family");
    std::string gadget_kind, instance_text, out_dir;
    generate->add_option("--gadget", gadget_kind, "lb | ls | li")->required();
    generate->add_option("--instance", instance_text, "e.g. \"b=7;m=1;A=2,2,3\"")->required();
    generate->add_option("--out", out_dir, "output directory")->required();

    // decompose
    auto* decompose = app.add_subcommand("decompose", "heuristic tree decomposition");
    std::string graph_file, out_file, strategy = "min_degree";
    bool nice_flag = false;
    decompose->add_option("--graph", graph_file, "graph file")->required();
    decompose->add_option("--out", out_file, "output .td file")->required();
    decompose->add_option("--strategy", strategy, "min_degree | min_fill");
    decompose->add_flag("--nice", nice_flag, "emit the nice form");

    // verify
    auto* verify = app.add_subcommand("verify", "check a witness file");
    std::string v_variant, v_guest, v_host, v_witness;
    verify->add_option("--variant", v_variant, "hom | lb | li | ls")->required();
    verify->add_option("--guest", v_guest)->required();
    verify->add_option("--host", v_host)->required();
    verify->add_option("--witness", v_witness)->required();

    // drm
    auto* drm = app.add_subcommand("drm", "print the degree refinement matrix");
    std::string drm_graph;
    drm->add_option("--graph", drm_graph)->required();

    // cover
    auto* cover = app.add_subcommand("cover", "truncated universal cover");
    std::string cover_graph, cover_out;
    int cover_root = 1, cover_depth = 0;
    cover->add_option("--graph", cover_graph)->required();
    cover->add_option("--root", cover_root)->required();
    cover->add_option("--depth", cover_depth)->required();
    cover->add_option("--out", cover_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    if (solve->parsed()) {
        SolveSettings s;
        s.variant = variant_from(variant_name);
        s.method = method;
        s.table_cap = table_cap_from_env();
        s.td_file = td_file;
        s.explain = explain && !quiet;
        s.quiet = quiet;
        s.verbose = verbose;
        if (budget_ms == 0 || budget_nodes == 0)
            throw UsageError("budgets must be positive");
        if (budget_ms > 0)
            s.budget.max_millis = budget_ms;
        if (budget_nodes > 0)
            s.budget.max_nodes = static_cast<std::uint64_t>(budget_nodes);
        Graph guest = parse_graph(slurp(guest_file));
        Graph host = parse_graph(slurp(host_file));
        return run_solve(guest, host, s, witness_file);
    }

    if (generate->parsed()) {
        ThreePartitionInstance inst = parse_instance_cli(instance_text);
        GadgetBundle bundle;
        if (gadget_kind == "lb")
            bundle = gadget_lb(inst);
        else if (gadget_kind == "ls")
            bundle = gadget_ls(inst);
        else if (gadget_kind == "li")
            bundle = gadget_li(inst);
        else
            throw UsageError("unknown gadget '" + gadget_kind + "'");
        std::filesystem::create_directories(out_dir);
        auto at = [&](const char* name) { return (std::filesystem::path(out_dir) / name).string(); };
        spill(at("guest.gr"), write_graph(bundle.guest));
        spill(at("host.gr"), write_graph(bundle.host));
        spill(at("guest.td"), write_td(bundle.guest_pd));
        spill(at("host.td"), write_td(bundle.host_pd));
        spill(at("instance.3p"), write_instance(bundle.instance));
        std::cout << "guest " << bundle.guest.vertex_count() << " vertices, host "
                  << bundle.host.vertex_count() << " vertices, widths "
                  << width(bundle.guest_pd) << "/" << width(bundle.host_pd) << "\n";
        std::cout << "wrote guest.gr host.gr guest.td host.td instance.3p to " << out_dir << "\n";
        return kExitYes;
    }

    if (decompose->parsed()) {
        Graph g = parse_graph(slurp(graph_file));
        EliminationStrategy strat;
        if (strategy == "min_degree")
            strat = EliminationStrategy::min_degree;
        else if (strategy == "min_fill")
            strat = EliminationStrategy::min_fill;
        else
            throw UsageError("unknown strategy '" + strategy + "'");
        TreeDecomposition td = heuristic_decomposition(g, strat);
        if (nice_flag) {
            NiceTreeDecomposition nice = make_nice(g, td);
            TreeDecomposition flat = nice.to_tree_decomposition();
            spill(out_file, write_td(flat));
            std::cout << "width " << width(flat) << " nodes " << flat.bags.size() << "\n";
        } else {
            spill(out_file, write_td(td));
            std::cout << "width " << width(td) << " nodes " << td.bags.size() << "\n";
        }
        return kExitYes;
    }

    if (verify->parsed()) {
        Graph guest = parse_graph(slurp(v_guest));
        Graph host = parse_graph(slurp(v_host));
        VertexMap witness = parse_witness(slurp(v_witness), guest, host);
        return run_verify(guest, host, witness, variant_from(v_variant));
    }

    if (drm->parsed()) {
        Graph g = parse_graph(slurp(drm_graph));
        DegreeRefinementMatrix matrix = degree_refinement_matrix(g);
        std::cout << "blocks " << matrix.block_count << "\n";
        for (int i = 0; i < matrix.block_count; ++i) {
            long long degree = 0;
            for (int j = 0; j < matrix.block_count; ++j)
                degree += matrix.entries[i][j];
            std::cout << "block " << i + 1 << " size " << matrix.blocks[i].size() << " degree "
                      << degree << " vertices";
            for (int v : matrix.blocks[i])
                std::cout << " " << v;
            std::cout << "\n";
        }
        std::cout << "matrix";
        for (int i = 0; i < matrix.block_count; ++i)
            for (int j = 0; j < matrix.block_count; ++j)
                std::cout << " " << matrix.entries[i][j];
        std::cout << "\n";
        return kExitYes;
    }

    if (cover->parsed()) {
        Graph g = parse_graph(slurp(cover_graph));
        TruncatedCover tc = truncated_universal_cover(g, cover_root, cover_depth);
        Graph out_graph = tc.tree;
        for (int node = 1; node <= out_graph.vertex_count(); ++node)
            out_graph.set_label(node, std::to_string(tc.projection[node]));
        spill(cover_out, write_graph(out_graph));
        std::cout << "nodes " << out_graph.vertex_count() << " depth " << tc.depth << "\n";
        return kExitYes;
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const locham::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const locham::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const locham::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const locham::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFormat;
    }
}
