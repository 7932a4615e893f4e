#pragma once

#include <vector>

#include "locham/graph.hpp"

namespace locham {

/// Partition of the vertex set where all vertices of a block have the
/// same number of neighbors in every block.
struct EquitablePartition {
    std::vector<std::vector<int>> blocks; // each sorted; listed by smallest member
    std::vector<int> block_of;            // vertex -> block index, index 0 unused
    bool coarsest = false;
};

/// Degree refinement matrix: block-to-block neighbor counts of the
/// coarsest equitable partition, with blocks in a canonical order that
/// is invariant under vertex relabeling.
struct DegreeRefinementMatrix {
    int block_count = 0;
    std::vector<std::vector<int>> entries; // block_count x block_count
    std::vector<std::vector<int>> blocks;  // the canonical block order used
};

/// Coarsest equitable partition of a connected graph, computed by
/// iterated splitting from the one-block partition.
/// Throws ValidationError on disconnected input.
EquitablePartition coarsest_equitable_partition(const Graph& g);

DegreeRefinementMatrix degree_refinement_matrix(const Graph& g);

/// True iff the canonical matrices of g and h are identical
/// (same block count, same entries).
bool drm_equal(const Graph& g, const Graph& h);

} // namespace locham
