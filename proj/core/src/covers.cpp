#include "locham/covers.hpp"

#include <algorithm>

namespace locham {

TruncatedCover truncated_universal_cover(const Graph& g, int root, int depth) {
    if (!is_connected(g))
        throw ValidationError("universal cover requires a connected base graph");
    if (root < 1 || root > g.vertex_count())
        throw ValidationError("cover root " + std::to_string(root) + " out of range");
    if (depth < 0)
        throw ValidationError("cover depth must be nonnegative");

    TruncatedCover cover;
    cover.base = g;
    cover.root = root;
    cover.depth = depth;
    cover.projection = {0, root};
    cover.node_depth = {0, 0};
    cover.parent = {0, 0};

    std::vector<std::pair<int, int>> edges;
    // BFS over walks; a child walk extends by a neighbor of the last vertex
    // other than the vertex the walk just came from
    for (int node = 1; node < static_cast<int>(cover.projection.size()); ++node) {
        if (cover.node_depth[node] == depth)
            continue;
        int last = cover.projection[node];
        int prev = cover.parent[node] == 0 ? 0 : cover.projection[cover.parent[node]];
        for (int next : g.neighbors(last)) {
            if (cover.node_depth[node] > 0 && next == prev)
                continue;
            cover.projection.push_back(next);
            cover.node_depth.push_back(cover.node_depth[node] + 1);
            cover.parent.push_back(node);
            edges.emplace_back(node, static_cast<int>(cover.projection.size()) - 1);
        }
    }
    cover.tree = Graph(static_cast<int>(cover.projection.size()) - 1, edges);
    return cover;
}

bool covering_property_holds_at(const TruncatedCover& cover, int node) {
    std::vector<int> projected;
    for (int w : cover.tree.neighbors(node))
        projected.push_back(cover.projection[w]);
    std::sort(projected.begin(), projected.end());
    return projected == cover.base.neighbors(cover.projection[node]);
}

namespace {

// State table for the tree decider: feasible[u][p][q] says the subtree of u
// embeds locally injectively with u colored p, where q is the color of u's
// parent (0 at the root). Children must take pairwise distinct colors among
// the host neighbors of p other than q, checked by bipartite matching.
struct TreeDecider {
    const Graph& g;
    const Graph& h;
    std::vector<int> parent, order; // rooted at vertex 1, BFS order
    std::vector<std::vector<int>> children;
    std::vector<std::vector<std::vector<char>>> feasible; // [u][p][q], q=0 allowed

    TreeDecider(const Graph& g_, const Graph& h_) : g(g_), h(h_) {
        const int n = g.vertex_count();
        parent.assign(n + 1, 0);
        children.assign(n + 1, {});
        std::vector<char> seen(n + 1, 0);
        order.push_back(1);
        seen[1] = 1;
        for (std::size_t i = 0; i < order.size(); ++i) {
            int v = order[i];
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = v;
                    children[v].push_back(w);
                    order.push_back(w);
                }
        }
        feasible.assign(n + 1, std::vector<std::vector<char>>(
                                   h.vertex_count() + 1,
                                   std::vector<char>(h.vertex_count() + 1, 0)));
    }

    // Kuhn's matching: children of u against candidate colors.
    bool match_children(const std::vector<int>& kids, const std::vector<int>& colors, int p,
                        std::vector<int>* chosen) const {
        if (kids.size() > colors.size())
            return false;
        std::vector<int> color_owner(colors.size(), -1);
        std::vector<char> visited;

        auto augment = [&](auto&& self, int kid_index) -> bool {
            for (std::size_t ci = 0; ci < colors.size(); ++ci) {
                if (visited[ci] || !feasible[kids[kid_index]][colors[ci]][p])
                    continue;
                visited[ci] = 1;
                if (color_owner[ci] < 0 || self(self, color_owner[ci])) {
                    color_owner[ci] = kid_index;
                    return true;
                }
            }
            return false;
        };

        for (std::size_t ki = 0; ki < kids.size(); ++ki) {
            visited.assign(colors.size(), 0);
            if (!augment(augment, static_cast<int>(ki)))
                return false;
        }
        if (chosen) {
            chosen->assign(kids.size(), 0);
            for (std::size_t ci = 0; ci < colors.size(); ++ci)
                if (color_owner[ci] >= 0)
                    (*chosen)[color_owner[ci]] = colors[ci];
        }
        return true;
    }

    void fill() {
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int u = *it;
            for (int p = 1; p <= h.vertex_count(); ++p) {
                std::vector<int> q_options{0};
                for (int q : h.neighbors(p))
                    q_options.push_back(q);
                for (int q : q_options) {
                    std::vector<int> colors;
                    for (int r : h.neighbors(p))
                        if (r != q)
                            colors.push_back(r);
                    feasible[u][p][q] = match_children(children[u], colors, p, nullptr);
                }
            }
        }
    }

    void assign_down(int u, int p, int q, std::vector<int>& image) const {
        image[u] = p;
        std::vector<int> colors;
        for (int r : h.neighbors(p))
            if (r != q)
                colors.push_back(r);
        std::vector<int> chosen;
        if (!match_children(children[u], colors, p, &chosen))
            throw InternalError("tree decider lost a matching during extraction");
        for (std::size_t i = 0; i < children[u].size(); ++i)
            assign_down(children[u][i], chosen[i], p, image);
    }
};

} // namespace

SolveResult tree_li_hom(const Graph& guest, const Graph& host) {
    if (guest.vertex_count() == 0)
        throw ValidationError("tree decider requires a nonempty guest tree");
    if (!is_connected(guest) || guest.edge_count() != guest.vertex_count() - 1)
        throw ValidationError("guest graph is not a tree");
    if (!is_connected(host))
        throw ValidationError("host graph must be connected");

    TreeDecider decider(guest, host);
    decider.fill();

    SolveResult result;
    for (int p = 1; p <= host.vertex_count(); ++p) {
        if (!decider.feasible[1][p][0])
            continue;
        std::vector<int> image(guest.vertex_count() + 1, 0);
        decider.assign_down(1, p, 0, image);
        VertexMap witness{&guest, &host, std::move(image)};
        if (!is_homomorphism(witness) || !check_local(witness, Locality::injective).ok)
            throw InternalError("tree decider produced an invalid witness");
        result.decision = Decision::yes;
        result.witness = std::move(witness);
        return result;
    }
    result.decision = Decision::no;
    return result;
}

} // namespace locham
