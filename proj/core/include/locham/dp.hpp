#pragma once

#include <optional>
#include <vector>

#include "locham/brute_force.hpp"
#include "locham/decomposition.hpp"
#include "locham/graph.hpp"

namespace locham {

/// One row of a bag table. `colors` assigns a host color to each bag
/// vertex in bag order. `sets` carries the per-vertex bookkeeping:
/// the colors a vertex still misses (surjective engine) or the colors
/// already used by its processed neighbors (injective and bijective
/// engines); empty for the plain engine. `child_a` / `child_b` link to
/// the generating entries in the child table(s).
struct DPEntry {
    std::vector<int> colors;
    std::vector<std::vector<int>> sets; // sorted; one per bag vertex, possibly absent
    int child_a = -1;
    int child_b = -1;
};

struct DPTable {
    std::vector<DPEntry> entries;
};

struct DPOptions {
    /// Refuse to run when |V_H|^k * 2^(max_degree(H)*k) exceeds this cap,
    /// where k is the largest bag size. ResourceError is thrown instead.
    double table_cap = 1e8;
};

// Node cases of the locally surjective engine, exposed individually.
// A bag table holds every feasible (coloring, missed-colors) pair for the
// subgraph processed so far.

/// All homomorphisms of the bag-induced subgraph into h, each with its
/// uniquely determined missed-color sets.
DPTable ls_leaf(const std::vector<int>& bag, const Graph& g, const Graph& h);

/// Keeps child entries whose forgotten vertex misses nothing, restricted
/// to the remaining bag. Duplicates are merged.
DPTable ls_forget(const DPTable& child, const std::vector<int>& child_bag, int forgotten);

/// Extends child entries by every color of the introduced vertex that is
/// adjacency-consistent, updating missed-color sets.
DPTable ls_introduce(const DPTable& child, const std::vector<int>& child_bag, int introduced,
                     const Graph& g, const Graph& h);

/// Combines entries agreeing on the coloring; missed sets intersect.
DPTable ls_join(const DPTable& left, const DPTable& right);

/// Bottom-up evaluation of all bag tables for one variant. Node order and
/// provenance links are deterministic.
std::vector<DPTable> run_dp_tables(const Graph& g, const Graph& h,
                                   const NiceTreeDecomposition& nice, Variant variant,
                                   DPOptions options = {});

/// Reads a full vertex map off the table provenance starting from the
/// given root entry. Throws ValidationError when the entry does not
/// exist and InternalError on inconsistent provenance.
VertexMap extract_witness(const Graph& g, const Graph& h, const NiceTreeDecomposition& nice,
                          const std::vector<DPTable>& tables, int root_entry);

/// Deciders over a valid nice decomposition of g. Guest and host must be
/// connected (callers pair components of disconnected inputs). Witnesses
/// are re-verified through check_local before being returned.
SolveResult solve_ls_dp(const Graph& g, const Graph& h, const NiceTreeDecomposition& nice,
                        DPOptions options = {});
SolveResult solve_li_dp(const Graph& g, const Graph& h, const NiceTreeDecomposition& nice,
                        DPOptions options = {});
SolveResult solve_lb_dp(const Graph& g, const Graph& h, const NiceTreeDecomposition& nice,
                        DPOptions options = {});
SolveResult solve_hom_dp(const Graph& g, const Graph& h, const NiceTreeDecomposition& nice,
                         DPOptions options = {});

/// The guardrail bound the options cap is compared against.
double dp_table_bound(const Graph& h, int max_bag_size, Variant variant);

} // namespace locham
