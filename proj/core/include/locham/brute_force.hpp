#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "locham/graph.hpp"

namespace locham {

enum class Variant { hom, lb, li, ls };

std::optional<Locality> locality_of(Variant v);
const char* variant_name(Variant v);

enum class Decision { yes, no, budget_exceeded };

/// Caps on a single solve call. Exceeding either one is reported as
/// Decision::budget_exceeded, never as a "no".
struct SearchBudget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    std::int64_t max_millis = std::numeric_limits<std::int64_t>::max();
};

struct SolveResult {
    Decision decision = Decision::no;
    std::optional<VertexMap> witness; // set on yes; graphs are the caller's
    std::uint64_t nodes = 0;          // search nodes explored
};

/// Exhaustive backtracking decider for all four variants. Candidate colors
/// are filtered by degree compatibility, domains are narrowed by forward
/// checking, and locality conflicts prune as soon as they appear. Every
/// yes-witness is re-verified through check_local before being returned.
SolveResult solve_bf(const Graph& guest, const Graph& host, Variant variant,
                     SearchBudget budget = {});

/// Same decision by plain enumeration of all |V_H|^|V_G| maps with no
/// pruning at all. Only usable on tiny instances; kept as the reference
/// the pruned search is tested against.
SolveResult solve_bf_unpruned(const Graph& guest, const Graph& host, Variant variant,
                              SearchBudget budget = {});

/// 3-Partition instance: 3m positive integers that sum to m*b, each
/// strictly between b/4 and b/2.
struct ThreePartitionInstance {
    std::vector<long long> elements; // a_1..a_3m in input order
    long long target_sum = 0;        // b
    int group_count = 0;             // m

    /// Throws ValidationError naming the first violated requirement.
    void validate() const;
};

struct ThreePartitionResult {
    bool yes = false;
    std::vector<std::array<int, 3>> groups; // indices into elements, each triple sums to b
};

/// Exhaustive 3-Partition decider over index triples with memoized
/// residual multisets.
ThreePartitionResult three_partition_bf(const ThreePartitionInstance& inst);

} // namespace locham
