#include "locham/gadgets.hpp"

#include <algorithm>

namespace locham {

namespace {

std::string idx_name(const char* stem, int i, int j) {
    return std::string(stem) + "_" + std::to_string(i) + "_" + std::to_string(j);
}

void apply_names(Graph& g, const std::map<std::string, int>& names) {
    for (const auto& [name, v] : names)
        g.set_label(v, name);
}

std::vector<int> sorted_bag(std::vector<int> bag) {
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    return bag;
}

void push_bag(TreeDecomposition& pd, std::vector<int> bag) {
    pd.bags.push_back(sorted_bag(std::move(bag)));
    if (pd.bags.size() > 1)
        pd.tree_edges.emplace_back(static_cast<int>(pd.bags.size()) - 2,
                                   static_cast<int>(pd.bags.size()) - 1);
}

// m decorated cycles plus a hub adjacent to every pendant; shared by the
// guest (3m cycles, three hubs) and host (m cycles, one hub) of the
// bijective family.
struct DecoratedCycles {
    std::vector<std::pair<int, int>> edges;
    std::map<std::string, int> names;
    int cycle_count, len;

    int u(int i, int j) const { return (i - 1) * 3 * len + j; }
    int p(int i, int j) const { return (i - 1) * 3 * len + len + j; }
    int q(int i, int j) const { return (i - 1) * 3 * len + 2 * len + j; }

    DecoratedCycles(int cycles, int b, const char* u_stem, const char* p_stem, const char* q_stem)
        : cycle_count(cycles), len(b) {
        for (int i = 1; i <= cycles; ++i)
            for (int j = 1; j <= b; ++j) {
                edges.emplace_back(u(i, j), u(i, j % b + 1));
                edges.emplace_back(u(i, j), p(i, j));
                edges.emplace_back(u(i, j), q(i, j));
                names[idx_name(u_stem, i, j)] = u(i, j);
                names[idx_name(p_stem, i, j)] = p(i, j);
                names[idx_name(q_stem, i, j)] = q(i, j);
            }
    }
};

} // namespace

GadgetBundle gadget_lb(const ThreePartitionInstance& inst) {
    inst.validate();
    const int m = inst.group_count;
    const int b = static_cast<int>(inst.target_sum);

    GadgetBundle bundle;
    bundle.instance = inst;

    // guest: 3m decorated cycles, x over the first a_i pendant pairs of each
    // cycle, y and z over the remaining p's and q's respectively
    DecoratedCycles guest(3 * m, b, "u", "p", "q");
    const int x = 9 * m * b + 1, y = x + 1, z = x + 2;
    guest.names["x"] = x;
    guest.names["y"] = y;
    guest.names["z"] = z;
    for (int i = 1; i <= 3 * m; ++i) {
        const int a = static_cast<int>(inst.elements[i - 1]);
        for (int j = 1; j <= b; ++j) {
            guest.edges.emplace_back(j <= a ? x : y, guest.p(i, j));
            guest.edges.emplace_back(j <= a ? x : z, guest.q(i, j));
        }
    }
    bundle.guest = Graph(9 * m * b + 3, guest.edges);
    bundle.guest_names = guest.names;
    apply_names(bundle.guest, bundle.guest_names);

    bundle.guest_pd.graph_n = bundle.guest.vertex_count();
    bundle.guest_pd.is_path = true;
    for (int i = 1; i <= 3 * m; ++i) {
        for (int j = 1; j <= b; ++j) {
            push_bag(bundle.guest_pd, {guest.u(i, j), guest.p(i, j), x, y, z, guest.u(i, 1)});
            push_bag(bundle.guest_pd, {guest.u(i, j), guest.q(i, j), x, y, z, guest.u(i, 1)});
            if (j < b)
                push_bag(bundle.guest_pd,
                         {guest.u(i, j), guest.u(i, j + 1), x, y, z, guest.u(i, 1)});
        }
    }

    // host: m decorated cycles, a single hub over every pendant
    DecoratedCycles host(m, b, "ut", "pt", "qt");
    const int xt = 3 * m * b + 1;
    host.names["xt"] = xt;
    for (int k = 1; k <= m; ++k)
        for (int j = 1; j <= b; ++j) {
            host.edges.emplace_back(xt, host.p(k, j));
            host.edges.emplace_back(xt, host.q(k, j));
        }
    bundle.host = Graph(3 * m * b + 1, host.edges);
    bundle.host_names = host.names;
    apply_names(bundle.host, bundle.host_names);

    bundle.host_pd.graph_n = bundle.host.vertex_count();
    bundle.host_pd.is_path = true;
    for (int k = 1; k <= m; ++k)
        for (int j = 1; j <= b; ++j) {
            push_bag(bundle.host_pd, {host.u(k, j), host.p(k, j), xt, host.u(k, 1)});
            push_bag(bundle.host_pd, {host.u(k, j), host.q(k, j), xt, host.u(k, 1)});
            if (j < b)
                push_bag(bundle.host_pd, {host.u(k, j), host.u(k, j + 1), xt, host.u(k, 1)});
        }

    return bundle;
}

GadgetBundle gadget_ls(const ThreePartitionInstance& inst) {
    inst.validate();
    const int m = inst.group_count;
    const int b = static_cast<int>(inst.target_sum);

    GadgetBundle bundle;
    bundle.instance = inst;

    auto guest_u = [&](int i, int j) { return (i - 1) * b + j; };
    const int x = 3 * m * b + 1, y = x + 1;
    std::vector<std::pair<int, int>> guest_edges;
    for (int i = 1; i <= 3 * m; ++i) {
        const int a = static_cast<int>(inst.elements[i - 1]);
        for (int j = 1; j <= b; ++j) {
            guest_edges.emplace_back(guest_u(i, j), guest_u(i, j % b + 1));
            guest_edges.emplace_back(j <= a ? x : y, guest_u(i, j));
            bundle.guest_names[idx_name("u", i, j)] = guest_u(i, j);
        }
    }
    bundle.guest_names["x"] = x;
    bundle.guest_names["y"] = y;
    bundle.guest = Graph(3 * m * b + 2, guest_edges);
    apply_names(bundle.guest, bundle.guest_names);

    bundle.guest_pd.graph_n = bundle.guest.vertex_count();
    bundle.guest_pd.is_path = true;
    for (int i = 1; i <= 3 * m; ++i)
        for (int j = 1; j < b; ++j)
            push_bag(bundle.guest_pd, {guest_u(i, j), guest_u(i, j + 1), x, y, guest_u(i, 1)});

    auto host_u = [&](int k, int j) { return (k - 1) * b + j; };
    const int xt = m * b + 1;
    std::vector<std::pair<int, int>> host_edges;
    for (int k = 1; k <= m; ++k)
        for (int j = 1; j <= b; ++j) {
            host_edges.emplace_back(host_u(k, j), host_u(k, j % b + 1));
            host_edges.emplace_back(xt, host_u(k, j));
            bundle.host_names[idx_name("ut", k, j)] = host_u(k, j);
        }
    bundle.host_names["xt"] = xt;
    bundle.host = Graph(m * b + 1, host_edges);
    apply_names(bundle.host, bundle.host_names);

    bundle.host_pd.graph_n = bundle.host.vertex_count();
    bundle.host_pd.is_path = true;
    for (int k = 1; k <= m; ++k)
        for (int j = 1; j < b; ++j)
            push_bag(bundle.host_pd, {host_u(k, j), host_u(k, j + 1), xt, host_u(k, 1)});

    return bundle;
}

GadgetBundle gadget_li(const ThreePartitionInstance& inst) {
    inst.validate();
    const int m = inst.group_count;
    const int b = static_cast<int>(inst.target_sum);

    GadgetBundle bundle;
    bundle.instance = inst;

    // guest: universal x over 3m paths of a_1..a_3m vertices
    std::vector<std::pair<int, int>> guest_edges;
    const int x = m * b + 1;
    int offset = 0;
    for (int i = 1; i <= 3 * m; ++i) {
        const int a = static_cast<int>(inst.elements[i - 1]);
        for (int j = 1; j <= a; ++j) {
            if (j < a)
                guest_edges.emplace_back(offset + j, offset + j + 1);
            guest_edges.emplace_back(x, offset + j);
            bundle.guest_names[idx_name("u", i, j)] = offset + j;
        }
        offset += a;
    }
    bundle.guest_names["x"] = x;
    bundle.guest = Graph(m * b + 1, guest_edges);
    apply_names(bundle.guest, bundle.guest_names);

    bundle.guest_pd.graph_n = bundle.guest.vertex_count();
    bundle.guest_pd.is_path = true;
    offset = 0;
    for (int i = 1; i <= 3 * m; ++i) {
        const int a = static_cast<int>(inst.elements[i - 1]);
        if (a == 1)
            push_bag(bundle.guest_pd, {offset + 1, x});
        for (int j = 1; j < a; ++j)
            push_bag(bundle.guest_pd, {offset + j, offset + j + 1, x});
        offset += a;
    }

    // host: universal hub over m paths of b vertices
    std::vector<std::pair<int, int>> host_edges;
    const int xt = m * b + 1;
    for (int k = 1; k <= m; ++k)
        for (int j = 1; j <= b; ++j) {
            int v = (k - 1) * b + j;
            if (j < b)
                host_edges.emplace_back(v, v + 1);
            host_edges.emplace_back(xt, v);
            bundle.host_names[idx_name("ut", k, j)] = v;
        }
    bundle.host_names["xt"] = xt;
    bundle.host = Graph(m * b + 1, host_edges);
    apply_names(bundle.host, bundle.host_names);

    bundle.host_pd.graph_n = bundle.host.vertex_count();
    bundle.host_pd.is_path = true;
    for (int k = 1; k <= m; ++k)
        for (int j = 1; j < b; ++j) {
            int v = (k - 1) * b + j;
            push_bag(bundle.host_pd, {v, v + 1, xt});
        }

    return bundle;
}

} // namespace locham
