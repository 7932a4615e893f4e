#pragma once

#include <string>
#include <vector>

#include "locham/graph.hpp"

namespace locham {

/// Tree decomposition: bags indexed 0..k-1 connected by tree edges.
/// `root` is informational (used when serializing nice decompositions).
struct TreeDecomposition {
    int graph_n = 0;
    std::vector<std::vector<int>> bags;          // each sorted ascending
    std::vector<std::pair<int, int>> tree_edges; // 0-based node indices
    bool is_path = false;
    int root = -1;
};

/// Checks tree-ness, vertex coverage, edge coverage, subtree connectivity
/// per vertex, and the path flag. Returns human-readable violations;
/// empty means valid.
std::vector<std::string> validate(const Graph& g, const TreeDecomposition& td);

/// Largest bag size minus one. Throws ValidationError on zero nodes.
int width(const TreeDecomposition& td);

enum class EliminationStrategy { min_degree, min_fill };

/// Tree decomposition from an elimination ordering. Always valid, width is
/// an upper bound on the treewidth only. Ties broken by smallest vertex id.
TreeDecomposition heuristic_decomposition(const Graph& g, EliminationStrategy strategy);

enum class NodeKind { leaf, introduce, forget, join };

struct NiceNode {
    std::vector<int> bag;  // sorted
    NodeKind kind = NodeKind::leaf;
    int vertex = 0;        // introduced / forgotten vertex
    int child = -1;
    int child2 = -1;       // second child, join nodes only
};

/// Rooted binary decomposition whose nodes are leaf / introduce / forget /
/// join. Produced with an empty root bag; hand-built instances may root
/// anywhere.
struct NiceTreeDecomposition {
    int graph_n = 0;
    std::vector<NiceNode> nodes;
    int root = -1;

    TreeDecomposition to_tree_decomposition() const;
};

/// Underlying decomposition validity plus the per-kind bag equations and
/// binary shape. Empty result means valid.
std::vector<std::string> validate_nice(const Graph& g, const NiceTreeDecomposition& ntd);

/// Converts a valid decomposition to nice form of the same width with an
/// empty root bag and single-vertex leaf bags.
NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td);

/// Decomposition of square(g) on the same node tree: each bag gains the
/// neighbors of all its vertices. Width is at most
/// max_degree(g) * (width(td) + 1) - 1.
TreeDecomposition square_decomposition(const Graph& g, const TreeDecomposition& td);

} // namespace locham
