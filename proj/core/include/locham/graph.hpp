#pragma once

#include <string>
#include <utility>
#include <vector>

#include "locham/errors.hpp"

namespace locham {

/// Simple undirected graph on vertices 1..n. No self-loops, no multi-edges.
/// Adjacency lists are kept sorted; the structure is immutable after
/// construction except for optional display labels.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Throws ValidationError on
    /// out-of-range endpoints, self-loops, or duplicate edges.
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const { return max_degree_; }

    /// Edges as pairs (u, v) with u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::string& label(int v) const;
    void set_label(int v, std::string text);
    bool has_labels() const { return !labels_.empty(); }

    /// Structural equality: same vertex count and edge set. Labels ignored.
    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::vector<int>> adj_;          // index 0 unused
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::string> labels_;            // empty when no labels set
    int max_degree_ = 0;
};

/// A total mapping from guest vertices to host vertices ("colors").
/// image[v] is the color of guest vertex v; index 0 is unused.
struct VertexMap {
    const Graph* guest = nullptr;
    const Graph* host = nullptr;
    std::vector<int> image;

    int operator()(int v) const { return image[v]; }
};

/// Convenience constructor: colors listed for vertices 1..n in order.
VertexMap make_vertex_map(const Graph& guest, const Graph& host, std::vector<int> colors);

enum class Locality { injective, surjective, bijective };

/// Raised by check_local when the map is not a homomorphism at edge (u, v).
struct NotAHomomorphismError : ValidationError {
    int u, v;
    NotAHomomorphismError(int u_, int v_)
        : ValidationError("map is not a homomorphism: guest edge " + std::to_string(u_) + "-" +
                          std::to_string(v_) + " is sent to a host non-edge"),
          u(u_), v(v_) {}
};

struct LocalViolation {
    enum class Kind { neighbor_collision, missed_color };
    Kind kind;
    int vertex;              // the guest vertex whose neighborhood fails
    int first = 0, second = 0; // colliding neighbors (neighbor_collision)
    int color = 0;           // uncovered host color (missed_color)

    std::string to_string() const;
};

struct LocalCheckResult {
    bool ok = false;
    std::vector<LocalViolation> violations;
};

/// True iff every guest edge maps to a host edge. Throws ValidationError
/// when the image is not a total in-range mapping.
bool is_homomorphism(const VertexMap& f);

/// Checks the restriction of f to every neighborhood against `mode`.
/// Precondition: f is a homomorphism (NotAHomomorphismError otherwise).
LocalCheckResult check_local(const VertexMap& f, Locality mode);

/// G^2: same vertices, an edge wherever distance in g is 1 or 2.
Graph square(const Graph& g);

/// Pairs of distinct vertices with at least one common neighbor, u < v,
/// sorted. Includes pairs that are also edges of g.
std::vector<std::pair<int, int>> common_neighbor_pairs(const Graph& g);

/// Maximal connected vertex sets, each sorted ascending, listed by
/// smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// True for graphs with exactly one component. The empty graph is not
/// considered connected.
bool is_connected(const Graph& g);

/// Subgraph induced by `vertices` with vertices renumbered 1..k in the
/// given order. Returns the graph and the new-to-old vertex table
/// (index 0 unused).
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const std::vector<int>& vertices);

} // namespace locham
