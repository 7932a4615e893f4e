#include "doctest.h"

#include <random>

#include "locham/decomposition.hpp"
#include "locham/dp.hpp"
#include "support/builders.hpp"

using namespace locham;
using namespace locham::testing;

namespace {

Graph single_vertex() { return Graph(1, {}); }

NiceTreeDecomposition nice_for(const Graph& g, EliminationStrategy s = EliminationStrategy::min_degree) {
    return make_nice(g, heuristic_decomposition(g, s));
}

// hand-rooted nice decomposition of an edge with a non-empty root bag
NiceTreeDecomposition edge_nice_nonempty_root() {
    NiceTreeDecomposition ntd;
    ntd.graph_n = 2;
    ntd.nodes.push_back({{1}, NodeKind::leaf, 0, -1, -1});
    ntd.nodes.push_back({{1, 2}, NodeKind::introduce, 2, 0, -1});
    ntd.root = 1;
    return ntd;
}

bool table_has(const DPTable& table, const std::vector<int>& colors,
               const std::vector<std::vector<int>>& sets) {
    for (const auto& e : table.entries)
        if (e.colors == colors && e.sets == sets)
            return true;
    return false;
}

} // namespace

TEST_SUITE("dp") {

TEST_CASE("surjective leaf tables") {
    Graph k2 = complete_graph(2);

    DPTable one = ls_leaf({1}, single_vertex(), k2);
    REQUIRE(one.entries.size() == 2);
    CHECK(table_has(one, {1}, {{2}}));
    CHECK(table_has(one, {2}, {{1}}));

    DPTable edge = ls_leaf({1, 2}, k2, k2);
    REQUIRE(edge.entries.size() == 2);
    CHECK(table_has(edge, {1, 2}, {{}, {}}));
    CHECK(table_has(edge, {2, 1}, {{}, {}}));
    CHECK(!table_has(edge, {1, 1}, {{}, {}})); // not a homomorphism, discarded
}

TEST_CASE("surjective forget keeps only satisfied vertices") {
    Graph k2 = complete_graph(2);
    DPTable edge = ls_leaf({1, 2}, k2, k2);
    DPTable after = ls_forget(edge, {1, 2}, 1);
    REQUIRE(after.entries.size() == 2);
    CHECK(table_has(after, {1}, {{}}));
    CHECK(table_has(after, {2}, {{}}));

    // a forgotten vertex that still misses a color is dropped
    DPTable lonely = ls_leaf({1}, single_vertex(), k2); // both entries miss one color
    CHECK(ls_forget(lonely, {1}, 1).entries.empty());

    CHECK(ls_forget(DPTable{}, {1, 2}, 1).entries.empty());
}

TEST_CASE("surjective introduce applies the three-case update") {
    Graph k2 = complete_graph(2);
    DPTable child = ls_leaf({2}, single_vertex(), k2);
    // guest is the edge 1-2; introducing 1 next to 2 forces the other color
    DPTable after = ls_introduce(child, {2}, 1, k2, k2);
    REQUIRE(after.entries.size() == 2);
    CHECK(table_has(after, {2, 1}, {{}, {}}));
    CHECK(table_has(after, {1, 2}, {{}, {}}));

    // no adjacency: both colors extend and the new vertex misses everything
    Graph two_isolated(2, {});
    DPTable spread = ls_introduce(child, {2}, 1, two_isolated, k2);
    REQUIRE(spread.entries.size() == 4);
    CHECK(table_has(spread, {1, 1}, {{2}, {2}}));
    CHECK(table_has(spread, {2, 2}, {{1}, {1}}));
}

TEST_CASE("surjective join intersects the missed sets") {
    // synthetic tables over one bag vertex mapped into a 4-star
    Graph star = star_graph(4); // center 1, leaves 2..5
    DPTable left, right;
    left.entries.push_back({{1}, {{2, 3}}, -1, -1});
    right.entries.push_back({{1}, {{3, 4}}, -1, -1});
    DPTable joined = ls_join(left, right);
    REQUIRE(joined.entries.size() == 1);
    CHECK(joined.entries[0].sets == std::vector<std::vector<int>>{{3}});

    DPTable same = ls_join(left, left);
    REQUIRE(same.entries.size() == 1);
    CHECK(same.entries[0].sets == left.entries[0].sets);

    DPTable other;
    other.entries.push_back({{2}, {{1}}, -1, -1});
    CHECK(ls_join(left, other).entries.empty());
    (void)star;
}

TEST_CASE("surjective solve on small named instances") {
    Graph c4 = cycle_graph(4), k2 = complete_graph(2);
    auto yes = solve_ls_dp(c4, k2, nice_for(c4));
    REQUIRE(yes.decision == Decision::yes);
    CHECK(check_local(*yes.witness, Locality::surjective).ok);

    CHECK(solve_ls_dp(c4, c4, nice_for(c4)).decision == Decision::yes);

    Graph p3 = path_graph(3), c3 = cycle_graph(3);
    CHECK(solve_ls_dp(p3, c3, nice_for(p3)).decision == Decision::no);
}

TEST_CASE("injective solve on small named instances") {
    Graph p4 = path_graph(4);
    CHECK(solve_li_dp(p4, p4, nice_for(p4)).decision == Decision::yes);
    CHECK(solve_li_dp(p4, path_graph(3), nice_for(p4)).decision == Decision::no);

    Graph c6 = cycle_graph(6), c3 = cycle_graph(3);
    auto out = solve_li_dp(c6, c3, nice_for(c6));
    REQUIRE(out.decision == Decision::yes);
    CHECK(check_local(*out.witness, Locality::injective).ok);
}

TEST_CASE("bijective solve on small named instances") {
    Graph c6 = cycle_graph(6), c3 = cycle_graph(3);
    auto cover = solve_lb_dp(c6, c3, nice_for(c6));
    REQUIRE(cover.decision == Decision::yes);
    CHECK(check_local(*cover.witness, Locality::bijective).ok);

    Graph c4 = cycle_graph(4), k2 = complete_graph(2);
    CHECK(solve_lb_dp(c4, k2, nice_for(c4)).decision == Decision::no);

    Graph k4 = complete_graph(4);
    CHECK(solve_lb_dp(k4, k4, nice_for(k4)).decision == Decision::yes);
}

TEST_CASE("plain homomorphism engine matches the chromatic facts") {
    Graph c5 = cycle_graph(5), c4 = cycle_graph(4);
    Graph k2 = complete_graph(2), k3 = complete_graph(3);
    CHECK(solve_hom_dp(c4, k2, nice_for(c4)).decision == Decision::yes);
    CHECK(solve_hom_dp(c5, k2, nice_for(c5)).decision == Decision::no);
    CHECK(solve_hom_dp(c5, k3, nice_for(c5)).decision == Decision::yes);
}

TEST_CASE("non-empty root bags are accepted and enforced") {
    Graph k2 = complete_graph(2);
    NiceTreeDecomposition ntd = edge_nice_nonempty_root();
    REQUIRE(validate_nice(k2, ntd).empty());
    CHECK(solve_ls_dp(k2, k2, ntd).decision == Decision::yes);
    CHECK(solve_lb_dp(k2, k2, ntd).decision == Decision::yes);
    CHECK(solve_li_dp(k2, k2, ntd).decision == Decision::yes);

    // against a path on three vertices one endpoint always misses a color,
    // so the root check must reject every entry
    Graph p3 = path_graph(3);
    CHECK(solve_ls_dp(k2, p3, ntd).decision == Decision::no);
    CHECK(solve_lb_dp(k2, p3, ntd).decision == Decision::no);
    CHECK(solve_li_dp(k2, p3, ntd).decision == Decision::yes);
}

TEST_CASE("decisions agree with the oracle across a random corpus") {
    std::mt19937 rng(83);
    int checked = 0;
    while (checked < 80) {
        Graph guest = random_connected(rng, rand_int(rng, 2, 8), rand_int(rng, 0, 3));
        Graph host = random_connected_max_deg(rng, rand_int(rng, 2, 5), 4, rand_int(rng, 0, 3));
        TreeDecomposition td = heuristic_decomposition(guest, EliminationStrategy::min_degree);
        if (width(td) > 3)
            continue;
        ++checked;
        NiceTreeDecomposition nice = make_nice(guest, td);
        for (Variant var : {Variant::ls, Variant::li, Variant::lb, Variant::hom}) {
            SolveResult dp;
            switch (var) {
            case Variant::ls: dp = solve_ls_dp(guest, host, nice); break;
            case Variant::li: dp = solve_li_dp(guest, host, nice); break;
            case Variant::lb: dp = solve_lb_dp(guest, host, nice); break;
            case Variant::hom: dp = solve_hom_dp(guest, host, nice); break;
            }
            auto oracle = solve_bf(guest, host, var);
            CHECK(dp.decision == oracle.decision);
            if (dp.decision == Decision::yes) {
                CHECK(is_homomorphism(*dp.witness));
                if (auto mode = locality_of(var))
                    CHECK(check_local(*dp.witness, *mode).ok);
            }
        }
    }
}

TEST_CASE("table guardrail refuses oversized runs") {
    std::mt19937 rng(89);
    Graph guest = random_connected(rng, 8, 10);
    Graph host = complete_graph(6);
    NiceTreeDecomposition nice = nice_for(guest);
    DPOptions tight;
    tight.table_cap = 10.0;
    CHECK_THROWS_AS(solve_ls_dp(guest, host, nice, tight), ResourceError);
    CHECK(dp_table_bound(host, 3, Variant::ls) ==
          doctest::Approx(std::pow(6, 3) * std::pow(2, 15)));
    CHECK(dp_table_bound(host, 3, Variant::hom) == doctest::Approx(std::pow(6, 3)));
}

TEST_CASE("disconnected inputs are rejected by the locality engines") {
    Graph two_edges(4, {{1, 2}, {3, 4}});
    Graph k2 = complete_graph(2);
    NiceTreeDecomposition nice = nice_for(two_edges);
    CHECK_THROWS_AS(solve_ls_dp(two_edges, k2, nice), ValidationError);
    CHECK_THROWS_AS(solve_li_dp(two_edges, k2, nice), ValidationError);
}

TEST_CASE("witness extraction walks provenance and rejects corruption") {
    Graph c4 = cycle_graph(4);
    Graph k2 = complete_graph(2);
    NiceTreeDecomposition nice = nice_for(c4);
    auto tables = run_dp_tables(c4, k2, nice, Variant::ls);
    REQUIRE(!tables[nice.root].entries.empty());
    VertexMap witness = extract_witness(c4, k2, nice, tables, 0);
    CHECK(is_homomorphism(witness));

    CHECK_THROWS_AS(extract_witness(c4, k2, nice, tables, 999), ValidationError);

    // corrupt one provenance link deep in the run
    for (auto& table : tables)
        for (auto& e : table.entries)
            if (e.child_a >= 0)
                e.child_a = 1 << 20;
    CHECK_THROWS_AS(extract_witness(c4, k2, nice, tables, 0), InternalError);
}

TEST_CASE("every table respects the theoretical entry bound") {
    std::mt19937 rng(97);
    for (int t = 0; t < 20; ++t) {
        Graph guest = random_connected(rng, rand_int(rng, 2, 7), rand_int(rng, 0, 2));
        Graph host = random_connected_max_deg(rng, rand_int(rng, 2, 5), 3, 2);
        NiceTreeDecomposition nice = nice_for(guest);
        int k = 0;
        for (const auto& node : nice.nodes)
            k = std::max(k, static_cast<int>(node.bag.size()));
        auto tables = run_dp_tables(guest, host, nice, Variant::ls);
        for (const auto& table : tables)
            CHECK(static_cast<double>(table.entries.size()) <=
                  dp_table_bound(host, k, Variant::ls));
    }
}

} // TEST_SUITE
