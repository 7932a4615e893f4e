#include "locham/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace locham {

namespace {

std::string vertex_list(const std::vector<int>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(vs[i]);
    }
    return out;
}

} // namespace

std::vector<std::string> validate(const Graph& g, const TreeDecomposition& td) {
    std::vector<std::string> bad;
    const int k = static_cast<int>(td.bags.size());

    if (td.graph_n != g.vertex_count())
        bad.push_back("decomposition is for a graph on " + std::to_string(td.graph_n) +
                      " vertices, got " + std::to_string(g.vertex_count()));
    if (k == 0) {
        if (g.vertex_count() > 0)
            bad.push_back("decomposition has no nodes");
        return bad;
    }

    for (int i = 0; i < k; ++i)
        for (int v : td.bags[i])
            if (v < 1 || v > g.vertex_count())
                bad.push_back("bag " + std::to_string(i + 1) + " contains out-of-range vertex " +
                              std::to_string(v));

    // tree-ness
    bool tree_ok = true;
    std::set<std::pair<int, int>> links;
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || a >= k || b < 0 || b >= k) {
            bad.push_back("link references a node outside 1.." + std::to_string(k));
            tree_ok = false;
            continue;
        }
        if (a == b) {
            bad.push_back("self link at node " + std::to_string(a + 1));
            tree_ok = false;
            continue;
        }
        auto e = std::minmax(a, b);
        if (!links.insert(e).second) {
            bad.push_back("duplicate link " + std::to_string(e.first + 1) + "-" +
                          std::to_string(e.second + 1));
            tree_ok = false;
        }
    }
    if (tree_ok) {
        if (static_cast<int>(links.size()) != k - 1) {
            bad.push_back("node tree is not a tree: " + std::to_string(k) + " nodes, " +
                          std::to_string(links.size()) + " links");
            tree_ok = false;
        } else {
            std::vector<std::vector<int>> nbr(k);
            for (auto [a, b] : links) {
                nbr[a].push_back(b);
                nbr[b].push_back(a);
            }
            std::vector<char> seen(k, 0);
            std::vector<int> stack{0};
            seen[0] = 1;
            int visited = 0;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                ++visited;
                for (int y : nbr[x])
                    if (!seen[y]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
            }
            if (visited != k) {
                bad.push_back("node tree is not a tree: disconnected");
                tree_ok = false;
            }
        }
    }

    // vertex and edge coverage
    std::vector<char> covered(g.vertex_count() + 1, 0);
    for (const auto& bag : td.bags)
        for (int v : bag)
            if (v >= 1 && v <= g.vertex_count())
                covered[v] = 1;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (!covered[v])
            bad.push_back("vertex " + std::to_string(v) + " not covered by any bag");

    for (auto [u, v] : g.edges()) {
        bool found = false;
        for (const auto& bag : td.bags) {
            if (std::binary_search(bag.begin(), bag.end(), u) &&
                std::binary_search(bag.begin(), bag.end(), v)) {
                found = true;
                break;
            }
        }
        if (!found)
            bad.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) +
                          " not covered by any bag");
    }

    // per-vertex subtree connectivity
    if (tree_ok) {
        std::vector<std::vector<int>> nbr(k);
        for (auto [a, b] : links) {
            nbr[a].push_back(b);
            nbr[b].push_back(a);
        }
        for (int v = 1; v <= g.vertex_count(); ++v) {
            std::vector<int> holding;
            for (int i = 0; i < k; ++i)
                if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v))
                    holding.push_back(i);
            if (holding.size() <= 1)
                continue;
            std::vector<char> in_set(k, 0), seen(k, 0);
            for (int i : holding)
                in_set[i] = 1;
            std::vector<int> stack{holding[0]};
            seen[holding[0]] = 1;
            std::size_t reached = 0;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                ++reached;
                for (int y : nbr[x])
                    if (in_set[y] && !seen[y]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
            }
            if (reached != holding.size())
                bad.push_back("bags containing vertex " + std::to_string(v) +
                              " do not form a connected subtree");
        }

        if (td.is_path) {
            std::vector<int> deg(k, 0);
            for (auto [a, b] : links) {
                ++deg[a];
                ++deg[b];
            }
            for (int i = 0; i < k; ++i)
                if (deg[i] > 2)
                    bad.push_back("path flag set but node " + std::to_string(i + 1) +
                                  " has tree degree " + std::to_string(deg[i]));
        }
    }

    for (int i = 0; i < k; ++i) {
        auto sorted = td.bags[i];
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        if (sorted != td.bags[i])
            bad.push_back("bag " + std::to_string(i + 1) + " is not a sorted set: " +
                          vertex_list(td.bags[i]));
    }

    return bad;
}

int width(const TreeDecomposition& td) {
    if (td.bags.empty())
        throw ValidationError("width of a decomposition with no nodes");
    std::size_t largest = 0;
    for (const auto& bag : td.bags)
        largest = std::max(largest, bag.size());
    return static_cast<int>(largest) - 1;
}

TreeDecomposition heuristic_decomposition(const Graph& g, EliminationStrategy strategy) {
    const int n = g.vertex_count();
    TreeDecomposition td;
    td.graph_n = n;
    if (n == 0)
        return td;

    // working fill graph as adjacency sets
    std::vector<std::set<int>> adj(n + 1);
    for (int v = 1; v <= n; ++v)
        adj[v] = {g.neighbors(v).begin(), g.neighbors(v).end()};
    std::vector<char> eliminated(n + 1, 0);

    auto fill_count = [&](int v) {
        long long missing = 0;
        std::vector<int> nb(adj[v].begin(), adj[v].end());
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!adj[nb[i]].count(nb[j]))
                    ++missing;
        return missing;
    };

    std::vector<int> position(n + 1, 0);
    std::vector<std::vector<int>> bag_later(n + 1); // later neighbors at elimination time

    for (int step = 1; step <= n; ++step) {
        int best = -1;
        long long best_score = 0;
        for (int v = 1; v <= n; ++v) {
            if (eliminated[v])
                continue;
            long long score = strategy == EliminationStrategy::min_degree
                                  ? static_cast<long long>(adj[v].size())
                                  : fill_count(v);
            if (best == -1 || score < best_score) {
                best = v;
                best_score = score;
            }
        }
        int v = best;
        eliminated[v] = 1;
        position[v] = step;
        bag_later[v] = {adj[v].begin(), adj[v].end()};
        for (int a : bag_later[v]) {
            adj[a].erase(v);
            for (int b : bag_later[v])
                if (a < b) {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
        }
    }

    // one node per vertex in elimination order; parent is the node of the
    // earliest-eliminated later neighbor
    std::vector<int> order(n + 1, 0);
    for (int v = 1; v <= n; ++v)
        order[position[v]] = v;
    for (int step = 1; step <= n; ++step) {
        int v = order[step];
        std::vector<int> bag = bag_later[v];
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        td.bags.push_back(std::move(bag));
    }
    for (int step = 1; step < n; ++step) {
        int v = order[step];
        int parent_step = step + 1;
        if (!bag_later[v].empty()) {
            parent_step = n;
            for (int w : bag_later[v])
                parent_step = std::min(parent_step, position[w]);
        }
        td.tree_edges.emplace_back(step - 1, parent_step - 1);
    }

    std::vector<int> deg(n, 0);
    for (auto [a, b] : td.tree_edges) {
        ++deg[a];
        ++deg[b];
    }
    td.is_path = *std::max_element(deg.begin(), deg.end()) <= 2 || n == 1;
    if (n == 1)
        td.is_path = true;
    return td;
}

TreeDecomposition NiceTreeDecomposition::to_tree_decomposition() const {
    TreeDecomposition td;
    td.graph_n = graph_n;
    td.root = root;
    for (const auto& node : nodes)
        td.bags.push_back(node.bag);
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
        if (nodes[i].child >= 0)
            td.tree_edges.emplace_back(i, nodes[i].child);
        if (nodes[i].child2 >= 0)
            td.tree_edges.emplace_back(i, nodes[i].child2);
    }
    std::vector<int> deg(nodes.size(), 0);
    for (auto [a, b] : td.tree_edges) {
        ++deg[a];
        ++deg[b];
    }
    td.is_path = nodes.empty() ||
                 *std::max_element(deg.begin(), deg.end()) <= 2;
    return td;
}

std::vector<std::string> validate_nice(const Graph& g, const NiceTreeDecomposition& ntd) {
    std::vector<std::string> bad = validate(g, ntd.to_tree_decomposition());
    const int k = static_cast<int>(ntd.nodes.size());
    if (k == 0)
        return bad;
    if (ntd.root < 0 || ntd.root >= k) {
        bad.push_back("root index out of range");
        return bad;
    }

    for (int i = 0; i < k; ++i) {
        const NiceNode& node = ntd.nodes[i];
        auto child_bag = [&](int c) -> const std::vector<int>& { return ntd.nodes[c].bag; };
        switch (node.kind) {
        case NodeKind::leaf:
            if (node.child >= 0 || node.child2 >= 0)
                bad.push_back("leaf node " + std::to_string(i + 1) + " has children");
            break;
        case NodeKind::introduce: {
            if (node.child < 0 || node.child2 >= 0) {
                bad.push_back("introduce node " + std::to_string(i + 1) +
                              " must have exactly one child");
                break;
            }
            std::vector<int> expect = child_bag(node.child);
            expect.push_back(node.vertex);
            std::sort(expect.begin(), expect.end());
            if (expect != node.bag ||
                std::binary_search(child_bag(node.child).begin(), child_bag(node.child).end(),
                                   node.vertex))
                bad.push_back("introduce node " + std::to_string(i + 1) +
                              " does not equal child bag plus vertex " +
                              std::to_string(node.vertex));
            break;
        }
        case NodeKind::forget: {
            if (node.child < 0 || node.child2 >= 0) {
                bad.push_back("forget node " + std::to_string(i + 1) +
                              " must have exactly one child");
                break;
            }
            std::vector<int> expect = node.bag;
            expect.push_back(node.vertex);
            std::sort(expect.begin(), expect.end());
            if (expect != child_bag(node.child) ||
                std::binary_search(node.bag.begin(), node.bag.end(), node.vertex))
                bad.push_back("forget node " + std::to_string(i + 1) +
                              " does not equal child bag minus vertex " +
                              std::to_string(node.vertex));
            break;
        }
        case NodeKind::join:
            if (node.child < 0 || node.child2 < 0) {
                bad.push_back("join node " + std::to_string(i + 1) + " must have two children");
                break;
            }
            if (child_bag(node.child) != node.bag || child_bag(node.child2) != node.bag)
                bad.push_back("join node " + std::to_string(i + 1) +
                              " children bags differ from its bag");
            break;
        }
    }

    // every non-root node is the child of exactly one node
    std::vector<int> parents(k, 0);
    for (int i = 0; i < k; ++i) {
        if (ntd.nodes[i].child >= 0)
            ++parents[ntd.nodes[i].child];
        if (ntd.nodes[i].child2 >= 0)
            ++parents[ntd.nodes[i].child2];
    }
    for (int i = 0; i < k; ++i) {
        int expected = i == ntd.root ? 0 : 1;
        if (parents[i] != expected)
            bad.push_back("node " + std::to_string(i + 1) + " has " + std::to_string(parents[i]) +
                          " parents");
    }
    return bad;
}

namespace {

struct NiceBuilder {
    std::vector<NiceNode> nodes;

    int add(NiceNode node) {
        nodes.push_back(std::move(node));
        return static_cast<int>(nodes.size()) - 1;
    }

    // leaf bag normalized to a single vertex, then introduces
    int leaf_chain(const std::vector<int>& bag) {
        if (bag.empty())
            return add({{}, NodeKind::leaf, 0, -1, -1});
        int cur = add({{bag[0]}, NodeKind::leaf, 0, -1, -1});
        std::vector<int> have{bag[0]};
        for (std::size_t i = 1; i < bag.size(); ++i) {
            have.push_back(bag[i]);
            std::sort(have.begin(), have.end());
            cur = add({have, NodeKind::introduce, bag[i], cur, -1});
        }
        return cur;
    }

    // forget everything in `from` \ `to`, then introduce `to` \ `from`
    int transform(int below, const std::vector<int>& from, const std::vector<int>& to) {
        std::vector<int> have = from;
        int cur = below;
        for (int v : from) {
            if (std::binary_search(to.begin(), to.end(), v))
                continue;
            have.erase(std::find(have.begin(), have.end(), v));
            cur = add({have, NodeKind::forget, v, cur, -1});
        }
        for (int v : to) {
            if (std::binary_search(from.begin(), from.end(), v))
                continue;
            have.push_back(v);
            std::sort(have.begin(), have.end());
            cur = add({have, NodeKind::introduce, v, cur, -1});
        }
        return cur;
    }
};

} // namespace

namespace {

int chain_cost(const std::vector<int>& from, const std::vector<int>& to) {
    int shared = 0;
    for (int v : from)
        if (std::binary_search(to.begin(), to.end(), v))
            ++shared;
    return static_cast<int>(from.size()) + static_cast<int>(to.size()) - 2 * shared;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    for (int v : a)
        if (!std::binary_search(b.begin(), b.end(), v))
            return false;
    return true;
}

// Re-nests children below siblings where the interface allows it: a child Y
// of X whose shared vertices with X all lie in a sibling Y' may hang below
// Y' instead (the shared vertices stay on the tree path, so the result is a
// valid decomposition with the same bags). A move is taken only when the
// exact local node-count estimate drops: transform chains, the join saved
// at X, the join possibly added at Y', and the leaf chain absorbed when Y'
// was a leaf.
void flatten_branching(std::vector<std::vector<int>>& children,
                       const std::vector<std::vector<int>>& bags) {
    const int k = static_cast<int>(bags.size());
    bool moved = true;
    while (moved) {
        moved = false;
        for (int x = 0; x < k && !moved; ++x) {
            auto& kids = children[x];
            if (kids.size() < 2)
                continue;
            for (std::size_t i = 0; i < kids.size() && !moved; ++i) {
                int y = kids[i];
                std::vector<int> interface;
                for (int v : bags[y])
                    if (std::binary_search(bags[x].begin(), bags[x].end(), v))
                        interface.push_back(v);
                for (std::size_t j = 0; j < kids.size() && !moved; ++j) {
                    if (i == j)
                        continue;
                    int other = kids[j];
                    if (!subset_of(interface, bags[other]))
                        continue;
                    int delta = chain_cost(bags[y], bags[other]) - chain_cost(bags[y], bags[x]);
                    delta -= 1; // join saved at x
                    if (children[other].empty())
                        delta -= static_cast<int>(bags[other].size()); // leaf chain absorbed
                    else
                        delta += 1; // join added at the new parent
                    if (delta >= 0)
                        continue;
                    kids.erase(kids.begin() + i);
                    children[other].push_back(y);
                    std::sort(children[other].begin(), children[other].end());
                    moved = true;
                }
            }
        }
    }
}

} // namespace

// Removes a vertex from a bag when the bag sits at the end of the vertex's
// region subtree and every incident edge inside the bag is covered by some
// other bag. Shrinks fill-heavy bags; never changes validity.
static TreeDecomposition thin_bags(const Graph& g, TreeDecomposition td) {
    const int k = static_cast<int>(td.bags.size());
    std::vector<std::vector<int>> nbr(k);
    for (auto [a, b] : td.tree_edges) {
        nbr[a].push_back(b);
        nbr[b].push_back(a);
    }
    auto bag_has = [&](int node, int v) {
        return std::binary_search(td.bags[node].begin(), td.bags[node].end(), v);
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < k && !changed; ++x) {
            for (int v : td.bags[x]) {
                int region_size = 0;
                for (int i = 0; i < k; ++i)
                    region_size += bag_has(i, v);
                if (region_size < 2)
                    continue;
                int region_neighbors = 0;
                for (int y : nbr[x])
                    region_neighbors += bag_has(y, v);
                if (region_neighbors > 1)
                    continue;
                bool edges_covered = true;
                for (int w : g.neighbors(v)) {
                    if (!bag_has(x, w))
                        continue;
                    bool elsewhere = false;
                    for (int i = 0; i < k && !elsewhere; ++i)
                        elsewhere = i != x && bag_has(i, v) && bag_has(i, w);
                    if (!elsewhere) {
                        edges_covered = false;
                        break;
                    }
                }
                if (!edges_covered)
                    continue;
                auto& bag = td.bags[x];
                bag.erase(std::lower_bound(bag.begin(), bag.end(), v));
                changed = true;
                break;
            }
        }
    }
    return td;
}

// Contracts tree edges whose bag is contained in the neighbor's bag,
// yielding a decomposition without redundant nodes.
static TreeDecomposition contract_subset_bags(TreeDecomposition td) {
    while (true) {
        const int k = static_cast<int>(td.bags.size());
        int from = -1, into = -1;
        for (auto [a, b] : td.tree_edges) {
            auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
                return std::includes(big.begin(), big.end(), small.begin(), small.end());
            };
            if (contains(td.bags[b], td.bags[a])) {
                from = a;
                into = b;
                break;
            }
            if (contains(td.bags[a], td.bags[b])) {
                from = b;
                into = a;
                break;
            }
        }
        if (from < 0)
            return td;
        TreeDecomposition next;
        next.graph_n = td.graph_n;
        next.is_path = false;
        std::vector<int> renumber(k, 0);
        for (int i = 0, j = 0; i < k; ++i) {
            if (i == from)
                continue;
            renumber[i] = j++;
            next.bags.push_back(td.bags[i]);
        }
        renumber[from] = renumber[into];
        std::set<std::pair<int, int>> links;
        for (auto [a, b] : td.tree_edges) {
            int x = renumber[a], y = renumber[b];
            if (x != y)
                links.insert(std::minmax(x, y));
        }
        next.tree_edges.assign(links.begin(), links.end());
        std::vector<int> deg(next.bags.size(), 0);
        for (auto [a, b] : next.tree_edges) {
            ++deg[a];
            ++deg[b];
        }
        next.is_path =
            next.bags.empty() || *std::max_element(deg.begin(), deg.end()) <= 2;
        td = std::move(next);
    }
}

// one construction attempt, parameterized by the root node, by whether the
// sibling re-nesting pass runs, and by the child ordering along the spine
static NiceTreeDecomposition build_nice_variant(const Graph& g, const TreeDecomposition& td,
                                                int root_node, bool flatten, bool ascending,
                                                bool empty_root, bool fat_leaves) {
    NiceTreeDecomposition out;
    out.graph_n = g.vertex_count();

    NiceBuilder builder;
    const int k = static_cast<int>(td.bags.size());
    if (k == 0) {
        out.nodes.push_back({{}, NodeKind::leaf, 0, -1, -1});
        out.root = 0;
        return out;
    }

    std::vector<std::vector<int>> nbr(k);
    for (auto [a, b] : td.tree_edges) {
        nbr[a].push_back(b);
        nbr[b].push_back(a);
    }
    for (auto& list : nbr)
        std::sort(list.begin(), list.end());

    std::vector<std::vector<int>> children(k);
    {
        std::vector<int> order{root_node};
        std::vector<char> seen(k, 0);
        seen[root_node] = 1;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int c : nbr[order[i]])
                if (!seen[c]) {
                    seen[c] = 1;
                    children[order[i]].push_back(c);
                    order.push_back(c);
                }
    }
    if (flatten)
        flatten_branching(children, td.bags);

    // Returns the index of a nice subtree whose top bag equals td.bags[node].
    // Children are absorbed along a spine whose bag accumulates their
    // interfaces with this node, smallest first; the full bag materializes
    // once at the top. Forgetting a branch vertex outside the accumulated
    // interface is final: were it shared with a later child or the parent,
    // it would lie inside an already-accumulated interface.
    auto build = [&](auto&& self, int node) -> int {
        const std::vector<int>& bag = td.bags[node];
        if (children[node].empty()) {
            if (fat_leaves)
                return builder.add({bag, NodeKind::leaf, 0, -1, -1});
            return builder.leaf_chain(bag);
        }

        auto interface_of = [&](int child) {
            std::vector<int> shared;
            for (int v : td.bags[child])
                if (std::binary_search(bag.begin(), bag.end(), v))
                    shared.push_back(v);
            return shared;
        };
        std::vector<int> order = children[node];
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            if (ascending)
                return interface_of(a).size() < interface_of(b).size();
            return interface_of(a).size() > interface_of(b).size();
        });

        std::vector<int> spine_bag = interface_of(order[0]);
        int spine = builder.transform(self(self, order[0]), td.bags[order[0]], spine_bag);
        for (std::size_t i = 1; i < order.size(); ++i) {
            std::vector<int> grown = spine_bag;
            for (int v : interface_of(order[i]))
                if (!std::binary_search(spine_bag.begin(), spine_bag.end(), v))
                    grown.push_back(v);
            std::sort(grown.begin(), grown.end());
            spine = builder.transform(spine, spine_bag, grown);
            int branch = builder.transform(self(self, order[i]), td.bags[order[i]], grown);
            spine = builder.add({grown, NodeKind::join, 0, spine, branch});
            spine_bag = std::move(grown);
        }
        return builder.transform(spine, spine_bag, bag);
    };

    int top = build(build, root_node);
    if (empty_root)
        top = builder.transform(top, td.bags[root_node], {});
    out.nodes = std::move(builder.nodes);
    out.root = top;
    return out;
}

NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td) {
    auto bad = validate(g, td);
    if (!bad.empty())
        throw ValidationError("make_nice on invalid decomposition: " + bad.front());

    const int k = static_cast<int>(td.bags.size());

    // smallest candidate wins; an empty root is preferred only as a
    // tie-break so the solvers usually see the vacuous acceptance shape
    std::vector<TreeDecomposition> sources{td};
    if (k > 0) {
        const int base_width = width(td);
        auto offer = [&](TreeDecomposition cand) {
            if (!cand.bags.empty() && width(cand) == base_width)
                sources.push_back(std::move(cand));
        };
        TreeDecomposition thinned = thin_bags(g, td);
        TreeDecomposition merged = contract_subset_bags(td);
        TreeDecomposition both = contract_subset_bags(thin_bags(g, td));
        offer(std::move(merged));
        offer(std::move(both));
        offer(std::move(thinned));
    }

    // Selection: candidates within the four-nodes-per-vertex budget beat
    // ones outside it; single-vertex leaf bags and an empty root bag are
    // preferred shapes, given up only when the budget demands it.
    const int node_budget = 4 * g.vertex_count();
    auto score = [&](const NiceTreeDecomposition& cand, bool fat, bool empty_root) {
        return std::make_tuple(g.vertex_count() > 0 &&
                                   static_cast<int>(cand.nodes.size()) > node_budget,
                               fat, !empty_root, cand.nodes.size());
    };
    NiceTreeDecomposition best;
    bool have = false;
    std::tuple<bool, bool, std::size_t, bool> best_score{};
    for (const TreeDecomposition& source : sources) {
        std::vector<int> source_roots{static_cast<int>(source.bags.size()) - 1, 0};
        int source_thin = 0;
        for (int i = 1; i < static_cast<int>(source.bags.size()); ++i)
            if (source.bags[i].size() < source.bags[source_thin].size())
                source_thin = i;
        source_roots.push_back(source_thin);
        for (int root_node : source_roots) {
            if (root_node < 0)
                continue;
            for (bool flatten : {true, false})
                for (bool ascending : {true, false})
                    for (bool empty_root : {true, false})
                        for (bool fat_leaves : {false, true}) {
                            NiceTreeDecomposition cand =
                                build_nice_variant(g, source, root_node, flatten, ascending,
                                                   empty_root, fat_leaves);
                            auto cand_score = score(cand, fat_leaves, empty_root);
                            if (!have || cand_score < best_score) {
                                best = std::move(cand);
                                best_score = cand_score;
                                have = true;
                            }
                        }
        }
    }
    return best;
}

TreeDecomposition square_decomposition(const Graph& g, const TreeDecomposition& td) {
    auto bad = validate(g, td);
    if (!bad.empty())
        throw ValidationError("square_decomposition on invalid decomposition: " + bad.front());

    TreeDecomposition out = td;
    for (auto& bag : out.bags) {
        std::set<int> grown(bag.begin(), bag.end());
        for (int v : bag)
            for (int w : g.neighbors(v))
                grown.insert(w);
        bag.assign(grown.begin(), grown.end());
    }
    return out;
}

} // namespace locham
