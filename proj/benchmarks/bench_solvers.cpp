#include <benchmark/benchmark.h>

#include <random>

#include "locham/brute_force.hpp"
#include "locham/covers.hpp"
#include "locham/decomposition.hpp"
#include "locham/dp.hpp"
#include "locham/equitable.hpp"
#include "locham/gadgets.hpp"

using namespace locham;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(v, v + 1);
    edges.emplace_back(n, 1);
    return Graph(n, edges);
}

Graph random_connected(std::mt19937& rng, int n, int extra) {
    std::set<std::pair<int, int>> edges;
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int v = 2; v <= n; ++v)
        edges.insert(std::minmax(pick(1, v - 1), v));
    for (int t = 0; t < extra; ++t) {
        int u = pick(1, n), v = pick(1, n);
        if (u != v)
            edges.insert(std::minmax(u, v));
    }
    return Graph(n, {edges.begin(), edges.end()});
}

} // namespace

static void BM_OracleCoverCycle(benchmark::State& state) {
    Graph guest = cycle(3 * static_cast<int>(state.range(0)));
    Graph host = cycle(3);
    for (auto _ : state) {
        auto result = solve_bf(guest, host, Variant::lb);
        benchmark::DoNotOptimize(result.decision);
    }
}
BENCHMARK(BM_OracleCoverCycle)->Arg(8)->Arg(32)->Arg(128);

static void BM_OracleGadgetLiYes(benchmark::State& state) {
    GadgetBundle bundle = gadget_li(ThreePartitionInstance{{2, 2, 3}, 7, 1});
    for (auto _ : state) {
        auto result = solve_bf(bundle.guest, bundle.host, Variant::li);
        benchmark::DoNotOptimize(result.decision);
    }
}
BENCHMARK(BM_OracleGadgetLiYes);

static void BM_OracleGadgetLbYes(benchmark::State& state) {
    GadgetBundle bundle = gadget_lb(ThreePartitionInstance{{2, 2, 3}, 7, 1});
    for (auto _ : state) {
        auto result = solve_bf(bundle.guest, bundle.host, Variant::lb);
        benchmark::DoNotOptimize(result.decision);
    }
}
BENCHMARK(BM_OracleGadgetLbYes);

static void BM_DpSurjectiveRandom(benchmark::State& state) {
    std::mt19937 rng(7);
    Graph guest = random_connected(rng, static_cast<int>(state.range(0)), 3);
    Graph host = cycle(4);
    NiceTreeDecomposition nice =
        make_nice(guest, heuristic_decomposition(guest, EliminationStrategy::min_degree));
    for (auto _ : state) {
        auto result = solve_ls_dp(guest, host, nice);
        benchmark::DoNotOptimize(result.decision);
    }
}
BENCHMARK(BM_DpSurjectiveRandom)->Arg(8)->Arg(16)->Arg(24);

static void BM_HeuristicDecomposition(benchmark::State& state) {
    std::mt19937 rng(11);
    Graph g = random_connected(rng, static_cast<int>(state.range(0)), 2 * state.range(0));
    for (auto _ : state) {
        auto td = heuristic_decomposition(g, EliminationStrategy::min_fill);
        benchmark::DoNotOptimize(td.bags.size());
    }
}
BENCHMARK(BM_HeuristicDecomposition)->Arg(30)->Arg(60)->Arg(120);

static void BM_MakeNice(benchmark::State& state) {
    std::mt19937 rng(13);
    Graph g = random_connected(rng, static_cast<int>(state.range(0)), state.range(0));
    TreeDecomposition td = heuristic_decomposition(g, EliminationStrategy::min_degree);
    for (auto _ : state) {
        auto nice = make_nice(g, td);
        benchmark::DoNotOptimize(nice.nodes.size());
    }
}
BENCHMARK(BM_MakeNice)->Arg(20)->Arg(40);

static void BM_CoarsestPartition(benchmark::State& state) {
    std::mt19937 rng(17);
    Graph g = random_connected(rng, static_cast<int>(state.range(0)), 3 * state.range(0));
    for (auto _ : state) {
        auto part = coarsest_equitable_partition(g);
        benchmark::DoNotOptimize(part.blocks.size());
    }
}
BENCHMARK(BM_CoarsestPartition)->Arg(50)->Arg(200);

static void BM_TruncatedCover(benchmark::State& state) {
    std::mt19937 rng(19);
    Graph g = random_connected(rng, 10, 6);
    for (auto _ : state) {
        auto cover = truncated_universal_cover(g, 1, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(cover.tree.vertex_count());
    }
}
BENCHMARK(BM_TruncatedCover)->Arg(4)->Arg(6);

static void BM_TreeLiHom(benchmark::State& state) {
    std::mt19937 rng(23);
    std::vector<std::pair<int, int>> edges;
    int n = static_cast<int>(state.range(0));
    for (int v = 2; v <= n; ++v)
        edges.emplace_back(std::uniform_int_distribution<int>(1, v - 1)(rng), v);
    Graph tree(n, edges);
    Graph host = random_connected(rng, 12, 10);
    for (auto _ : state) {
        auto result = tree_li_hom(tree, host);
        benchmark::DoNotOptimize(result.decision);
    }
}
BENCHMARK(BM_TreeLiHom)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
