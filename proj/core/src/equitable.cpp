#include "locham/equitable.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace locham {

namespace {

void require_connected(const Graph& g) {
    auto comps = connected_components(g);
    if (comps.size() == 1)
        return;
    if (comps.empty())
        throw ValidationError("equitable partition requires a nonempty connected graph");
    throw ValidationError("graph is disconnected: vertex " + std::to_string(comps[0][0]) +
                          " and vertex " + std::to_string(comps[1][0]) +
                          " lie in different components");
}

} // namespace

EquitablePartition coarsest_equitable_partition(const Graph& g) {
    require_connected(g);
    const int n = g.vertex_count();

    std::vector<int> block_of(n + 1, 0);
    int block_count = 1;
    while (true) {
        // signature of v: current block plus neighbor counts per block
        std::map<std::pair<int, std::vector<int>>, int> renumber;
        std::vector<int> next(n + 1, 0);
        for (int v = 1; v <= n; ++v) {
            std::vector<int> counts(block_count, 0);
            for (int w : g.neighbors(v))
                ++counts[block_of[w]];
            auto key = std::make_pair(block_of[v], std::move(counts));
            auto [it, inserted] = renumber.emplace(std::move(key), static_cast<int>(renumber.size()));
            next[v] = it->second;
        }
        int next_count = static_cast<int>(renumber.size());
        if (next_count == block_count)
            break;
        block_of = std::move(next);
        block_count = next_count;
    }

    // order blocks by smallest vertex
    std::vector<int> first_vertex(block_count, 0);
    for (int v = n; v >= 1; --v)
        first_vertex[block_of[v]] = v;
    std::vector<int> order(block_count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return first_vertex[a] < first_vertex[b]; });
    std::vector<int> position(block_count);
    for (int i = 0; i < block_count; ++i)
        position[order[i]] = i;

    EquitablePartition part;
    part.blocks.resize(block_count);
    part.block_of.assign(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
        int b = position[block_of[v]];
        part.block_of[v] = b;
        part.blocks[b].push_back(v);
    }
    part.coarsest = true;
    return part;
}

namespace {

std::vector<std::vector<int>> block_matrix(const Graph& g, const EquitablePartition& part) {
    const int k = static_cast<int>(part.blocks.size());
    std::vector<std::vector<int>> m(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i) {
        int v = part.blocks[i][0]; // any representative; counts agree within a block
        for (int w : g.neighbors(v))
            ++m[i][part.block_of[w]];
    }
    return m;
}

// Canonical order of the blocks, derived from the matrix alone: replay the
// refinement from a single class, splitting classes by aggregated neighbor
// counts and ordering siblings by descending count signature. For the
// coarsest partition of a connected graph this always reaches singleton
// classes: a class that never splits would merge into a coarser equitable
// partition.
std::vector<int> canonical_order(const std::vector<std::vector<int>>& m,
                                 const std::vector<std::vector<int>>& blocks) {
    const int k = static_cast<int>(m.size());
    std::vector<std::vector<int>> classes{std::vector<int>(k)};
    std::iota(classes[0].begin(), classes[0].end(), 0);

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<int>> next;
        for (const auto& cls : classes) {
            if (cls.size() == 1) {
                next.push_back(cls);
                continue;
            }
            std::vector<std::pair<std::vector<long long>, int>> keyed;
            keyed.reserve(cls.size());
            for (int i : cls) {
                std::vector<long long> sig;
                sig.reserve(classes.size());
                for (const auto& other : classes) {
                    long long total = 0;
                    for (int j : other)
                        total += m[i][j];
                    sig.push_back(total);
                }
                keyed.emplace_back(std::move(sig), i);
            }
            std::stable_sort(keyed.begin(), keyed.end(),
                             [](const auto& a, const auto& b) { return a.first > b.first; });
            std::size_t start = 0;
            for (std::size_t t = 1; t <= keyed.size(); ++t) {
                if (t == keyed.size() || keyed[t].first != keyed[start].first) {
                    std::vector<int> run;
                    for (std::size_t s = start; s < t; ++s)
                        run.push_back(keyed[s].second);
                    if (run.size() != cls.size())
                        changed = true;
                    next.push_back(std::move(run));
                    start = t;
                }
            }
        }
        classes = std::move(next);
    }

    std::vector<int> order;
    for (auto& cls : classes) {
        // unreachable for coarsest partitions; keep a stable fallback
        std::sort(cls.begin(), cls.end(),
                  [&](int a, int b) { return blocks[a][0] < blocks[b][0]; });
        for (int i : cls)
            order.push_back(i);
    }
    return order;
}

} // namespace

DegreeRefinementMatrix degree_refinement_matrix(const Graph& g) {
    EquitablePartition part = coarsest_equitable_partition(g);
    auto m = block_matrix(g, part);
    auto order = canonical_order(m, part.blocks);

    const int k = static_cast<int>(order.size());
    DegreeRefinementMatrix drm;
    drm.block_count = k;
    drm.entries.assign(k, std::vector<int>(k, 0));
    drm.blocks.resize(k);
    for (int i = 0; i < k; ++i) {
        drm.blocks[i] = part.blocks[order[i]];
        for (int j = 0; j < k; ++j)
            drm.entries[i][j] = m[order[i]][order[j]];
    }
    return drm;
}

bool drm_equal(const Graph& g, const Graph& h) {
    auto a = degree_refinement_matrix(g);
    auto b = degree_refinement_matrix(h);
    return a.block_count == b.block_count && a.entries == b.entries;
}

} // namespace locham
