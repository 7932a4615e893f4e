#include "locham/dp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <set>

namespace locham {

namespace {

enum class SetKind { none, missed, used };

SetKind set_kind(Variant v) {
    switch (v) {
    case Variant::hom: return SetKind::none;
    case Variant::ls: return SetKind::missed;
    case Variant::li:
    case Variant::lb: return SetKind::used;
    }
    return SetKind::none;
}

struct TableBuilder {
    DPTable table;
    std::map<std::vector<int>, int> index;

    static std::vector<int> key_of(const DPEntry& e) {
        std::vector<int> key = e.colors;
        for (const auto& s : e.sets) {
            key.push_back(-1);
            key.insert(key.end(), s.begin(), s.end());
        }
        return key;
    }

    void insert(DPEntry e) {
        auto key = key_of(e);
        if (index.emplace(std::move(key), static_cast<int>(table.entries.size())).second)
            table.entries.push_back(std::move(e));
    }
};

int position_of(const std::vector<int>& bag, int v) {
    auto it = std::lower_bound(bag.begin(), bag.end(), v);
    if (it == bag.end() || *it != v)
        throw InternalError("vertex " + std::to_string(v) + " not found in bag");
    return static_cast<int>(it - bag.begin());
}

std::vector<int> sorted_insert(std::vector<int> xs, int v) {
    xs.insert(std::upper_bound(xs.begin(), xs.end(), v), v);
    return xs;
}

std::vector<int> sorted_erase(std::vector<int> xs, int v) {
    auto it = std::lower_bound(xs.begin(), xs.end(), v);
    if (it != xs.end() && *it == v)
        xs.erase(it);
    return xs;
}

// positions in `bag` of the guest neighbors of bag[i], per i
std::vector<std::vector<int>> bag_neighbor_positions(const std::vector<int>& bag, const Graph& g) {
    std::vector<std::vector<int>> out(bag.size());
    for (std::size_t i = 0; i < bag.size(); ++i)
        for (std::size_t j = 0; j < bag.size(); ++j)
            if (i != j && g.has_edge(bag[i], bag[j]))
                out[i].push_back(static_cast<int>(j));
    return out;
}

DPTable generic_leaf(const std::vector<int>& bag, const Graph& g, const Graph& h, Variant var) {
    const SetKind kind = set_kind(var);
    TableBuilder out;
    const int k = static_cast<int>(bag.size());
    const int hn = h.vertex_count();
    if (k == 0) {
        out.insert(DPEntry{});
        return out.table;
    }
    if (hn == 0)
        return out.table;

    auto nbr_pos = bag_neighbor_positions(bag, g);
    std::vector<int> colors(k, 1);
    while (true) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            if (var == Variant::lb && g.degree(bag[i]) != h.degree(colors[i]))
                ok = false;
            for (int j : nbr_pos[i]) {
                if (j < i)
                    continue; // each bag edge checked once
                if (!h.has_edge(colors[i], colors[j])) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok && kind == SetKind::used) {
            // neighborhood of every bag vertex must receive distinct colors
            for (int i = 0; i < k && ok; ++i) {
                std::vector<int> seen;
                for (int j : nbr_pos[i])
                    seen.push_back(colors[j]);
                std::sort(seen.begin(), seen.end());
                if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
                    ok = false;
            }
        }
        if (ok) {
            DPEntry e;
            e.colors = colors;
            if (kind != SetKind::none) {
                e.sets.resize(k);
                for (int i = 0; i < k; ++i) {
                    std::vector<int> assigned;
                    for (int j : nbr_pos[i])
                        assigned.push_back(colors[j]);
                    std::sort(assigned.begin(), assigned.end());
                    assigned.erase(std::unique(assigned.begin(), assigned.end()), assigned.end());
                    if (kind == SetKind::missed) {
                        std::vector<int> missed;
                        for (int p : h.neighbors(colors[i]))
                            if (!std::binary_search(assigned.begin(), assigned.end(), p))
                                missed.push_back(p);
                        e.sets[i] = std::move(missed);
                    } else {
                        e.sets[i] = std::move(assigned);
                    }
                }
            }
            out.insert(std::move(e));
        }

        int pos = k - 1;
        while (pos >= 0 && colors[pos] == hn)
            colors[pos--] = 1;
        if (pos < 0)
            break;
        ++colors[pos];
    }
    return out.table;
}

DPTable generic_forget(const DPTable& child, const std::vector<int>& child_bag, int forgotten,
                       const Graph& h, Variant var) {
    const SetKind kind = set_kind(var);
    const int pos = position_of(child_bag, forgotten);
    TableBuilder out;
    for (std::size_t idx = 0; idx < child.entries.size(); ++idx) {
        const DPEntry& e = child.entries[idx];
        if (kind == SetKind::missed && !e.sets[pos].empty())
            continue;
        if (var == Variant::lb && e.sets[pos] != h.neighbors(e.colors[pos]))
            continue;
        DPEntry r;
        r.colors = e.colors;
        r.colors.erase(r.colors.begin() + pos);
        if (kind != SetKind::none) {
            r.sets = e.sets;
            r.sets.erase(r.sets.begin() + pos);
        }
        r.child_a = static_cast<int>(idx);
        out.insert(std::move(r));
    }
    return out.table;
}

DPTable generic_introduce(const DPTable& child, const std::vector<int>& child_bag, int introduced,
                          const Graph& g, const Graph& h, Variant var) {
    const SetKind kind = set_kind(var);
    std::vector<int> bag = sorted_insert(child_bag, introduced);
    const int pos_u = position_of(bag, introduced);

    // child positions of the introduced vertex's neighbors inside the bag
    std::vector<int> nbr_child_pos;
    for (std::size_t j = 0; j < child_bag.size(); ++j)
        if (g.has_edge(introduced, child_bag[j]))
            nbr_child_pos.push_back(static_cast<int>(j));

    TableBuilder out;
    for (std::size_t idx = 0; idx < child.entries.size(); ++idx) {
        const DPEntry& e = child.entries[idx];

        std::vector<int> nbr_colors;
        for (int j : nbr_child_pos)
            nbr_colors.push_back(e.colors[j]);
        std::sort(nbr_colors.begin(), nbr_colors.end());
        if (kind == SetKind::used &&
            std::adjacent_find(nbr_colors.begin(), nbr_colors.end()) != nbr_colors.end())
            continue; // two bag neighbors of u share a color

        for (int p = 1; p <= h.vertex_count(); ++p) {
            if (var == Variant::lb && g.degree(introduced) != h.degree(p))
                continue;
            bool ok = true;
            for (int j : nbr_child_pos)
                if (!h.has_edge(p, e.colors[j])) {
                    ok = false;
                    break;
                }
            if (ok && kind == SetKind::used)
                for (int j : nbr_child_pos)
                    if (std::binary_search(e.sets[j].begin(), e.sets[j].end(), p)) {
                        ok = false; // p already used at a neighbor of bag[j]
                        break;
                    }
            if (!ok)
                continue;

            DPEntry r;
            r.colors = e.colors;
            r.colors.insert(r.colors.begin() + pos_u, p);
            if (kind != SetKind::none) {
                r.sets = e.sets;
                r.sets.insert(r.sets.begin() + pos_u, std::vector<int>{});
                if (kind == SetKind::missed) {
                    std::vector<int> missed;
                    for (int q : h.neighbors(p))
                        if (!std::binary_search(nbr_colors.begin(), nbr_colors.end(), q))
                            missed.push_back(q);
                    r.sets[pos_u] = std::move(missed);
                    for (int j : nbr_child_pos) {
                        int par = j < pos_u ? j : j + 1;
                        r.sets[par] = sorted_erase(r.sets[par], p);
                    }
                } else {
                    r.sets[pos_u] = nbr_colors;
                    for (int j : nbr_child_pos) {
                        int par = j < pos_u ? j : j + 1;
                        r.sets[par] = sorted_insert(r.sets[par], p);
                    }
                }
            }
            r.child_a = static_cast<int>(idx);
            out.insert(std::move(r));
        }
    }
    return out.table;
}

DPTable generic_join(const DPTable& left, const DPTable& right, const std::vector<int>& bag,
                     const Graph& g, Variant var) {
    const SetKind kind = set_kind(var);
    std::vector<std::vector<int>> nbr_pos;
    if (kind == SetKind::used)
        nbr_pos = bag_neighbor_positions(bag, g);

    std::map<std::vector<int>, std::vector<int>> right_by_colors;
    for (std::size_t idx = 0; idx < right.entries.size(); ++idx)
        right_by_colors[right.entries[idx].colors].push_back(static_cast<int>(idx));

    TableBuilder out;
    for (std::size_t li = 0; li < left.entries.size(); ++li) {
        const DPEntry& a = left.entries[li];
        auto it = right_by_colors.find(a.colors);
        if (it == right_by_colors.end())
            continue;
        for (int ri : it->second) {
            const DPEntry& b = right.entries[ri];
            DPEntry r;
            r.colors = a.colors;
            bool ok = true;
            if (kind != SetKind::none) {
                r.sets.resize(a.sets.size());
                for (std::size_t i = 0; i < a.sets.size() && ok; ++i) {
                    std::vector<int> inter;
                    std::set_intersection(a.sets[i].begin(), a.sets[i].end(), b.sets[i].begin(),
                                          b.sets[i].end(), std::back_inserter(inter));
                    if (kind == SetKind::missed) {
                        r.sets[i] = std::move(inter);
                    } else {
                        // colors used on both sides must be exactly the bag
                        // neighbors' colors, else a color collides at bag[i]
                        std::vector<int> bag_nbr_colors;
                        for (int j : nbr_pos[i])
                            bag_nbr_colors.push_back(a.colors[j]);
                        std::sort(bag_nbr_colors.begin(), bag_nbr_colors.end());
                        if (inter != bag_nbr_colors) {
                            ok = false;
                            break;
                        }
                        std::vector<int> uni;
                        std::set_union(a.sets[i].begin(), a.sets[i].end(), b.sets[i].begin(),
                                       b.sets[i].end(), std::back_inserter(uni));
                        r.sets[i] = std::move(uni);
                    }
                }
            }
            if (!ok)
                continue;
            r.child_a = static_cast<int>(li);
            r.child_b = ri;
            out.insert(std::move(r));
        }
    }
    return out.table;
}

bool entry_accepts(const DPEntry& e, const std::vector<int>& bag, const Graph& h, Variant var) {
    switch (set_kind(var)) {
    case SetKind::none:
        return true;
    case SetKind::missed:
        for (const auto& s : e.sets)
            if (!s.empty())
                return false;
        return true;
    case SetKind::used:
        if (var == Variant::li)
            return true;
        for (std::size_t i = 0; i < bag.size(); ++i)
            if (e.sets[i] != h.neighbors(e.colors[i]))
                return false;
        return true;
    }
    return false;
}

std::vector<int> post_order(const NiceTreeDecomposition& nice) {
    std::vector<int> order, stack{nice.root};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        order.push_back(x);
        if (nice.nodes[x].child >= 0)
            stack.push_back(nice.nodes[x].child);
        if (nice.nodes[x].child2 >= 0)
            stack.push_back(nice.nodes[x].child2);
    }
    std::reverse(order.begin(), order.end());
    return order;
}

} // namespace

DPTable ls_leaf(const std::vector<int>& bag, const Graph& g, const Graph& h) {
    return generic_leaf(bag, g, h, Variant::ls);
}

DPTable ls_forget(const DPTable& child, const std::vector<int>& child_bag, int forgotten) {
    // host never consulted for the surjective forget condition
    static const Graph no_host;
    return generic_forget(child, child_bag, forgotten, no_host, Variant::ls);
}

DPTable ls_introduce(const DPTable& child, const std::vector<int>& child_bag, int introduced,
                     const Graph& g, const Graph& h) {
    return generic_introduce(child, child_bag, introduced, g, h, Variant::ls);
}

DPTable ls_join(const DPTable& left, const DPTable& right) {
    static const Graph no_graph;
    std::vector<int> bag;
    if (!left.entries.empty())
        bag.resize(left.entries[0].colors.size());
    return generic_join(left, right, bag, no_graph, Variant::ls);
}

double dp_table_bound(const Graph& h, int max_bag_size, Variant variant) {
    double bound = std::pow(static_cast<double>(h.vertex_count()), max_bag_size);
    if (max_bag_size == 0)
        bound = 1.0;
    if (set_kind(variant) != SetKind::none)
        bound *= std::pow(2.0, static_cast<double>(h.max_degree()) * max_bag_size);
    return bound;
}

std::vector<DPTable> run_dp_tables(const Graph& g, const Graph& h,
                                   const NiceTreeDecomposition& nice, Variant variant,
                                   DPOptions options) {
    auto bad = validate_nice(g, nice);
    if (!bad.empty())
        throw ValidationError("invalid nice decomposition: " + bad.front());

    int k = 0;
    for (const auto& node : nice.nodes)
        k = std::max(k, static_cast<int>(node.bag.size()));
    const double bound = dp_table_bound(h, k, variant);
    if (bound > options.table_cap)
        throw ResourceError("table bound " + std::to_string(bound) + " exceeds cap " +
                            std::to_string(options.table_cap) +
                            " (largest bag " + std::to_string(k) + ", host degree " +
                            std::to_string(h.max_degree()) + ")");

#ifndef NDEBUG
    std::vector<std::set<int>> below(nice.nodes.size());
#endif

    std::vector<DPTable> tables(nice.nodes.size());
    for (int x : post_order(nice)) {
        const NiceNode& node = nice.nodes[x];
        switch (node.kind) {
        case NodeKind::leaf:
            tables[x] = generic_leaf(node.bag, g, h, variant);
            break;
        case NodeKind::introduce:
            tables[x] = generic_introduce(tables[node.child], nice.nodes[node.child].bag,
                                          node.vertex, g, h, variant);
            break;
        case NodeKind::forget:
#ifndef NDEBUG
            // a forgotten vertex has its whole guest neighborhood processed
            for (int w : g.neighbors(node.vertex))
                assert(below[node.child].count(w) && "forgotten vertex has unseen neighbors");
#endif
            tables[x] = generic_forget(tables[node.child], nice.nodes[node.child].bag, node.vertex,
                                       h, variant);
            break;
        case NodeKind::join:
            tables[x] = generic_join(tables[node.child], tables[node.child2], node.bag, g, variant);
            break;
        }
#ifndef NDEBUG
        below[x].insert(node.bag.begin(), node.bag.end());
        if (node.child >= 0)
            below[x].insert(below[node.child].begin(), below[node.child].end());
        if (node.child2 >= 0)
            below[x].insert(below[node.child2].begin(), below[node.child2].end());
#endif
        double node_bound = dp_table_bound(h, static_cast<int>(node.bag.size()), variant);
        if (static_cast<double>(tables[x].entries.size()) > node_bound)
            throw InternalError("bag table exceeds its theoretical bound");
    }
    return tables;
}

VertexMap extract_witness(const Graph& g, const Graph& h, const NiceTreeDecomposition& nice,
                          const std::vector<DPTable>& tables, int root_entry) {
    if (nice.root < 0 || tables.size() != nice.nodes.size())
        throw ValidationError("extract_witness: tables do not match the decomposition");
    if (root_entry < 0 || root_entry >= static_cast<int>(tables[nice.root].entries.size()))
        throw ValidationError("extract_witness: no such accepting entry");

    std::vector<int> image(g.vertex_count() + 1, 0);
    std::vector<std::pair<int, int>> stack{{nice.root, root_entry}};
    while (!stack.empty()) {
        auto [x, ei] = stack.back();
        stack.pop_back();
        const NiceNode& node = nice.nodes[x];
        const DPEntry& e = tables[x].entries[ei];
        for (std::size_t i = 0; i < node.bag.size(); ++i) {
            int v = node.bag[i];
            int c = e.colors[i];
            if (image[v] != 0 && image[v] != c)
                throw InternalError("provenance assigns two colors to vertex " + std::to_string(v));
            image[v] = c;
        }
        auto push_child = [&](int child_node, int child_entry) {
            if (child_node < 0 || child_entry < 0 ||
                child_entry >= static_cast<int>(tables[child_node].entries.size()))
                throw InternalError("broken provenance link");
            stack.emplace_back(child_node, child_entry);
        };
        switch (node.kind) {
        case NodeKind::leaf:
            break;
        case NodeKind::introduce:
        case NodeKind::forget:
            push_child(node.child, e.child_a);
            break;
        case NodeKind::join:
            push_child(node.child, e.child_a);
            push_child(node.child2, e.child_b);
            break;
        }
    }
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (image[v] == 0)
            throw InternalError("provenance never assigned vertex " + std::to_string(v));
    return VertexMap{&g, &h, std::move(image)};
}

namespace {

SolveResult solve_dp(const Graph& g, const Graph& h, const NiceTreeDecomposition& nice,
                     Variant variant, DPOptions options) {
    if (variant != Variant::hom) {
        if (!is_connected(g))
            throw ValidationError("guest graph must be connected; pair components first");
        if (!is_connected(h))
            throw ValidationError("host graph must be connected; pair components first");
    }

    auto tables = run_dp_tables(g, h, nice, variant, options);

    SolveResult result;
    for (const auto& t : tables)
        result.nodes += t.entries.size();

    const auto& root_bag = nice.nodes[nice.root].bag;
    const auto& root_table = tables[nice.root];
    for (std::size_t i = 0; i < root_table.entries.size(); ++i) {
        if (!entry_accepts(root_table.entries[i], root_bag, h, variant))
            continue;
        VertexMap witness = extract_witness(g, h, nice, tables, static_cast<int>(i));
        if (!is_homomorphism(witness))
            throw InternalError("dp produced a non-homomorphism witness");
        if (auto mode = locality_of(variant))
            if (!check_local(witness, *mode).ok)
                throw InternalError("dp produced a witness failing the locality check");
        result.decision = Decision::yes;
        result.witness = std::move(witness);
        return result;
    }
    result.decision = Decision::no;
    return result;
}

} // namespace

SolveResult solve_ls_dp(const Graph& g, const Graph& h, const NiceTreeDecomposition& nice,
                        DPOptions options) {
    return solve_dp(g, h, nice, Variant::ls, options);
}

SolveResult solve_li_dp(const Graph& g, const Graph& h, const NiceTreeDecomposition& nice,
                        DPOptions options) {
    return solve_dp(g, h, nice, Variant::li, options);
}

SolveResult solve_lb_dp(const Graph& g, const Graph& h, const NiceTreeDecomposition& nice,
                        DPOptions options) {
    return solve_dp(g, h, nice, Variant::lb, options);
}

SolveResult solve_hom_dp(const Graph& g, const Graph& h, const NiceTreeDecomposition& nice,
                         DPOptions options) {
    return solve_dp(g, h, nice, Variant::hom, options);
}

} // namespace locham
