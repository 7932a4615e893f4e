#pragma once

#include <map>
#include <string>

#include "locham/brute_force.hpp"
#include "locham/decomposition.hpp"
#include "locham/graph.hpp"

namespace locham {

/// Guest/host pair reduced from a 3-Partition instance, with explicit
/// path decompositions for both graphs and a table mapping structured
/// vertex names (u_i_j, p_i_j, q_i_j, x, y, z and the host-side
/// ut_k_j, pt_k_j, qt_k_j, xt) to vertex ids. The same names are set as
/// graph labels.
struct GadgetBundle {
    Graph guest;
    Graph host;
    TreeDecomposition guest_pd;
    TreeDecomposition host_pd;
    ThreePartitionInstance instance;
    std::map<std::string, int> guest_names;
    std::map<std::string, int> host_names;
};

/// Locally bijective family. Guest: 3m pendant-decorated b-cycles plus
/// x, y, z wired to the pendants by element size; host: m decorated
/// cycles plus one hub adjacent to every pendant. Path decompositions
/// have widths at most 5 (guest) and 3 (host). A locally bijective
/// homomorphism exists iff the instance admits a 3-partition.
GadgetBundle gadget_lb(const ThreePartitionInstance& inst);

/// Locally surjective family. Guest: 3m bare b-cycles plus x and y wired
/// to cycle vertices by element size; host: m cycles plus a universal
/// vertex. Widths at most 4 (guest) and 3 (host).
GadgetBundle gadget_ls(const ThreePartitionInstance& inst);

/// Locally injective family. Guest: a universal vertex over 3m paths of
/// a_i vertices; host: a universal vertex over m paths of b vertices.
/// Both decompositions have width at most 2.
GadgetBundle gadget_li(const ThreePartitionInstance& inst);

} // namespace locham
