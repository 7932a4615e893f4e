#include "locham/graph.hpp"

#include <algorithm>
#include <set>

namespace locham {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 0)
        throw ValidationError("vertex count must be nonnegative, got " + std::to_string(n));
    adj_.assign(n_ + 1, {});
    std::set<std::pair<int, int>> seen;
    edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 1 || u > n_ || v < 1 || v > n_)
            throw ValidationError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                  " references a vertex outside 1.." + std::to_string(n_));
        if (u == v)
            throw ValidationError("self-loop at vertex " + std::to_string(u));
        auto e = std::minmax(u, v);
        if (!seen.insert(e).second)
            throw ValidationError("duplicate edge " + std::to_string(e.first) + "-" +
                                  std::to_string(e.second));
    }
    for (auto e : seen) {
        edges_.push_back(e);
        adj_[e.first].push_back(e.second);
        adj_[e.second].push_back(e.first);
    }
    for (int v = 1; v <= n_; ++v) {
        std::sort(adj_[v].begin(), adj_[v].end());
        max_degree_ = std::max(max_degree_, static_cast<int>(adj_[v].size()));
    }
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw ValidationError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

const std::string& Graph::label(int v) const {
    check_vertex(v);
    static const std::string empty;
    if (labels_.empty())
        return empty;
    return labels_[v];
}

void Graph::set_label(int v, std::string text) {
    check_vertex(v);
    if (labels_.empty())
        labels_.assign(n_ + 1, "");
    labels_[v] = std::move(text);
}

VertexMap make_vertex_map(const Graph& guest, const Graph& host, std::vector<int> colors) {
    if (static_cast<int>(colors.size()) != guest.vertex_count())
        throw ValidationError("expected one color per guest vertex");
    std::vector<int> image(guest.vertex_count() + 1, 0);
    for (int v = 1; v <= guest.vertex_count(); ++v)
        image[v] = colors[v - 1];
    return VertexMap{&guest, &host, std::move(image)};
}

std::string LocalViolation::to_string() const {
    if (kind == Kind::neighbor_collision)
        return "vertex " + std::to_string(vertex) + ": neighbors " + std::to_string(first) +
               " and " + std::to_string(second) + " share a color";
    return "vertex " + std::to_string(vertex) + ": host color " + std::to_string(color) +
           " is not assigned to any neighbor";
}

namespace {

void check_map_shape(const VertexMap& f) {
    if (f.guest == nullptr || f.host == nullptr)
        throw ValidationError("vertex map has no graphs attached");
    const int n = f.guest->vertex_count();
    if (static_cast<int>(f.image.size()) != n + 1)
        throw ValidationError("vertex map image does not cover all guest vertices");
    for (int v = 1; v <= n; ++v)
        if (f.image[v] < 1 || f.image[v] > f.host->vertex_count())
            throw ValidationError("vertex map sends " + std::to_string(v) +
                                  " to out-of-range color " + std::to_string(f.image[v]));
}

} // namespace

bool is_homomorphism(const VertexMap& f) {
    check_map_shape(f);
    for (auto [u, v] : f.guest->edges())
        if (!f.host->has_edge(f.image[u], f.image[v]))
            return false;
    return true;
}

LocalCheckResult check_local(const VertexMap& f, Locality mode) {
    check_map_shape(f);
    for (auto [u, v] : f.guest->edges())
        if (!f.host->has_edge(f.image[u], f.image[v]))
            throw NotAHomomorphismError(u, v);

    LocalCheckResult result;
    const Graph& g = *f.guest;
    const Graph& h = *f.host;
    const bool want_injective = mode == Locality::injective || mode == Locality::bijective;
    const bool want_surjective = mode == Locality::surjective || mode == Locality::bijective;

    for (int u = 1; u <= g.vertex_count(); ++u) {
        const auto& nbrs = g.neighbors(u);
        if (want_injective) {
            // first colliding pair in (smaller, larger) order
            bool found = false;
            for (std::size_t i = 0; i < nbrs.size() && !found; ++i)
                for (std::size_t j = i + 1; j < nbrs.size() && !found; ++j)
                    if (f.image[nbrs[i]] == f.image[nbrs[j]]) {
                        result.violations.push_back({LocalViolation::Kind::neighbor_collision, u,
                                                     nbrs[i], nbrs[j], 0});
                        found = true;
                    }
        }
        if (want_surjective) {
            std::vector<int> hit;
            hit.reserve(nbrs.size());
            for (int w : nbrs)
                hit.push_back(f.image[w]);
            std::sort(hit.begin(), hit.end());
            for (int p : h.neighbors(f.image[u]))
                if (!std::binary_search(hit.begin(), hit.end(), p))
                    result.violations.push_back({LocalViolation::Kind::missed_color, u, 0, 0, p});
        }
    }
    result.ok = result.violations.empty();
    return result;
}

std::vector<std::pair<int, int>> common_neighbor_pairs(const Graph& g) {
    std::set<std::pair<int, int>> pairs;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        const auto& nbrs = g.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                pairs.emplace(nbrs[i], nbrs[j]);
    }
    return {pairs.begin(), pairs.end()};
}

Graph square(const Graph& g) {
    std::set<std::pair<int, int>> all(g.edges().begin(), g.edges().end());
    for (auto p : common_neighbor_pairs(g))
        all.insert(p);
    Graph sq(g.vertex_count(), {all.begin(), all.end()});
    return sq;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> components;
    std::vector<char> seen(g.vertex_count() + 1, 0);
    for (int s = 1; s <= g.vertex_count(); ++s) {
        if (seen[s])
            continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() == 1;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> old_of(vertices.size() + 1, 0);
    std::vector<int> new_of(g.vertex_count() + 1, 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 1 || v > g.vertex_count())
            throw ValidationError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
        if (new_of[v] != 0)
            throw ValidationError("induced_subgraph: vertex " + std::to_string(v) + " listed twice");
        old_of[i + 1] = v;
        new_of[v] = static_cast<int>(i) + 1;
    }
    std::vector<std::pair<int, int>> edge_list;
    for (auto [u, v] : g.edges())
        if (new_of[u] != 0 && new_of[v] != 0)
            edge_list.emplace_back(new_of[u], new_of[v]);
    return {Graph(static_cast<int>(vertices.size()), edge_list), std::move(old_of)};
}

} // namespace locham
