#pragma once

#include <vector>

#include "locham/decomposition.hpp"
#include "locham/graph.hpp"

namespace locham::testing {

/// Exhaustive check whether g admits a tree decomposition of the given
/// width using at most max_bags bags: enumerates every set of candidate
/// bags and every labeled tree over them. Only for tiny inputs.
inline bool exists_decomposition_of_width(const Graph& g, int target_width, int max_bags) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> candidates;
    for (int mask = 1; mask < (1 << n); ++mask) {
        if (__builtin_popcount(mask) > target_width + 1)
            continue;
        std::vector<int> bag;
        for (int v = 1; v <= n; ++v)
            if (mask >> (v - 1) & 1)
                bag.push_back(v);
        candidates.push_back(std::move(bag));
    }

    std::vector<int> chosen;
    auto try_trees = [&](const std::vector<std::vector<int>>& bags) {
        const int k = static_cast<int>(bags.size());
        TreeDecomposition td;
        td.graph_n = n;
        td.bags = bags;
        if (k == 1)
            return validate(g, td).empty();
        // all labeled trees on k nodes via Pruefer sequences
        std::vector<int> seq(std::max(0, k - 2), 0);
        while (true) {
            std::vector<int> degree(k, 1);
            for (int s : seq)
                ++degree[s];
            td.tree_edges.clear();
            std::vector<int> work = seq;
            std::vector<char> used(k, 0);
            for (int s : work) {
                int leaf = -1;
                for (int v = 0; v < k; ++v)
                    if (degree[v] == 1 && !used[v]) {
                        leaf = v;
                        break;
                    }
                td.tree_edges.emplace_back(leaf, s);
                used[leaf] = 1;
                --degree[s];
            }
            std::vector<int> last;
            for (int v = 0; v < k; ++v)
                if (!used[v] && degree[v] == 1)
                    last.push_back(v);
            td.tree_edges.emplace_back(last[0], last[1]);
            if (validate(g, td).empty())
                return true;

            int pos = static_cast<int>(seq.size()) - 1;
            while (pos >= 0 && seq[pos] == k - 1)
                seq[pos--] = 0;
            if (pos < 0)
                break;
            ++seq[pos];
        }
        return false;
    };

    auto pick = [&](auto&& self, std::size_t from, std::vector<std::vector<int>>& bags) -> bool {
        if (!bags.empty()) {
            // cheap necessary condition before enumerating trees
            std::vector<char> covered(n + 1, 0);
            for (const auto& bag : bags)
                for (int v : bag)
                    covered[v] = 1;
            bool all = true;
            for (int v = 1; v <= n && all; ++v)
                all = covered[v];
            bool edges_ok = true;
            for (auto [u, v] : g.edges()) {
                bool found = false;
                for (const auto& bag : bags)
                    if (std::binary_search(bag.begin(), bag.end(), u) &&
                        std::binary_search(bag.begin(), bag.end(), v)) {
                        found = true;
                        break;
                    }
                if (!found) {
                    edges_ok = false;
                    break;
                }
            }
            if (all && edges_ok && try_trees(bags))
                return true;
        }
        if (static_cast<int>(bags.size()) == max_bags)
            return false;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            bags.push_back(candidates[i]);
            if (self(self, i + 1, bags))
                return true;
            bags.pop_back();
        }
        return false;
    };

    std::vector<std::vector<int>> bags;
    return pick(pick, 0, bags);
}

/// Largest clique size by subset enumeration; n must stay small.
inline int brute_force_clique_number(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> verts;
        for (int v = 1; v <= n; ++v)
            if (mask >> (v - 1) & 1)
                verts.push_back(v);
        bool clique = true;
        for (std::size_t i = 0; i < verts.size() && clique; ++i)
            for (std::size_t j = i + 1; j < verts.size() && clique; ++j)
                if (!g.has_edge(verts[i], verts[j]))
                    clique = false;
        if (clique)
            best = std::max(best, static_cast<int>(verts.size()));
    }
    return best;
}

} // namespace locham::testing
