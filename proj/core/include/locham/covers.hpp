#pragma once

#include <vector>

#include "locham/brute_force.hpp"
#include "locham/graph.hpp"

namespace locham {

/// Finite prefix of the universal cover of a connected base graph: the
/// tree of non-backtracking walks from `root` of length at most `depth`,
/// where a walk is adjacent to the walk obtained by deleting its last
/// vertex. `projection` sends each walk to its last vertex.
struct TruncatedCover {
    Graph base;
    int root = 0;
    int depth = 0;
    Graph tree;                  // walks renumbered 1..N in BFS order; node 1 is the root walk
    std::vector<int> projection; // node -> base vertex, index 0 unused
    std::vector<int> node_depth; // walk length per node
    std::vector<int> parent;     // 0 for the root node

    /// True when the node is below the truncation depth, so its whole
    /// neighborhood is present.
    bool interior(int node) const { return node_depth[node] < depth; }
};

/// Throws ValidationError on a disconnected base or negative depth.
TruncatedCover truncated_universal_cover(const Graph& g, int root, int depth);

/// Whether the projection restricted to the node's tree neighborhood is a
/// bijection onto the base neighborhood of its image. Holds for every
/// interior node by construction; exposed so tests can assert it directly.
bool covering_property_holds_at(const TruncatedCover& cover, int node);

/// Polynomial decider for locally injective homomorphisms from a tree.
/// Throws ValidationError when the guest is not a tree or either graph is
/// disconnected. The witness, when present, passes the injective check.
SolveResult tree_li_hom(const Graph& guest, const Graph& host);

} // namespace locham
