#include "locham/brute_force.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <set>

namespace locham {

std::optional<Locality> locality_of(Variant v) {
    switch (v) {
    case Variant::hom: return std::nullopt;
    case Variant::lb: return Locality::bijective;
    case Variant::li: return Locality::injective;
    case Variant::ls: return Locality::surjective;
    }
    return std::nullopt;
}

const char* variant_name(Variant v) {
    switch (v) {
    case Variant::hom: return "hom";
    case Variant::lb: return "lb";
    case Variant::li: return "li";
    case Variant::ls: return "ls";
    }
    return "?";
}

namespace {

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

bool degree_compatible(Variant var, int guest_degree, int host_degree) {
    switch (var) {
    case Variant::hom: return true;
    case Variant::lb: return guest_degree == host_degree;
    case Variant::li: return guest_degree <= host_degree;
    case Variant::ls: return guest_degree >= host_degree;
    }
    return true;
}

void verify_witness(const VertexMap& f, Variant var) {
    if (!is_homomorphism(f))
        throw InternalError("search produced a non-homomorphism witness");
    if (auto mode = locality_of(var))
        if (!check_local(f, *mode).ok)
            throw InternalError("search produced a witness failing the locality check");
}

// Backtracking over host-color domains kept as flat bit rows; one memcpy
// saves or restores the whole mutable state, so search nodes stay cheap.
struct Searcher {
    const Graph& g;
    const Graph& h;
    Variant var;
    SearchBudget budget;
    bool need_inj, need_surj;

    int n, hn, words;
    std::vector<std::vector<int>> dist2;   // common-neighbor adjacency in g
    std::vector<std::uint64_t> host_nbr;   // color -> neighbor bit row

    // mutable state, all flat
    std::vector<std::uint64_t> domain;     // (n+1) rows of `words`
    std::vector<std::uint64_t> missing;    // same shape; rows live for assigned vertices
    std::vector<int> color;                // 0 = unassigned
    std::vector<int> free_nbrs;
    int unassigned = 0;

    std::vector<std::uint64_t> saved_bits; // per depth: domain row block + missing row block
    std::vector<int> saved_ints;
    std::vector<int> saved_unassigned;

    Clock clock;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    std::uint64_t* row(std::vector<std::uint64_t>& grid, int v) { return grid.data() + v * words; }
    const std::uint64_t* host_row(int c) const { return host_nbr.data() + c * words; }

    static bool test_bit(const std::uint64_t* r, int c) { return r[c >> 6] >> (c & 63) & 1; }
    static void clear_bit(std::uint64_t* r, int c) { r[c >> 6] &= ~(1ull << (c & 63)); }
    static void set_bit(std::uint64_t* r, int c) { r[c >> 6] |= 1ull << (c & 63); }

    int popcount_row(const std::uint64_t* r) const {
        int total = 0;
        for (int w = 0; w < words; ++w)
            total += __builtin_popcountll(r[w]);
        return total;
    }

    bool empty_row(const std::uint64_t* r) const {
        for (int w = 0; w < words; ++w)
            if (r[w])
                return false;
        return true;
    }

    Searcher(const Graph& g_, const Graph& h_, Variant var_, SearchBudget budget_)
        : g(g_), h(h_), var(var_), budget(budget_) {
        auto mode = locality_of(var);
        need_inj = mode == Locality::injective || mode == Locality::bijective;
        need_surj = mode == Locality::surjective || mode == Locality::bijective;

        n = g.vertex_count();
        hn = h.vertex_count();
        words = hn / 64 + 1;

        dist2.assign(n + 1, {});
        if (need_inj)
            for (auto [a, b] : common_neighbor_pairs(g)) {
                dist2[a].push_back(b);
                dist2[b].push_back(a);
            }

        host_nbr.assign(static_cast<std::size_t>(hn + 1) * words, 0);
        for (int c = 1; c <= hn; ++c)
            for (int d : h.neighbors(c))
                set_bit(host_nbr.data() + c * words, d);

        domain.assign(static_cast<std::size_t>(n + 1) * words, 0);
        missing.assign(static_cast<std::size_t>(n + 1) * words, 0);
        color.assign(n + 1, 0);
        free_nbrs.assign(n + 1, 0);
        for (int v = 1; v <= n; ++v) {
            free_nbrs[v] = g.degree(v);
            for (int c = 1; c <= hn; ++c)
                if (degree_compatible(var, g.degree(v), h.degree(c)))
                    set_bit(row(domain, v), c);
        }
        unassigned = n;

        saved_bits.resize(static_cast<std::size_t>(n + 1) * 2 * (n + 1) * words);
        saved_ints.resize(static_cast<std::size_t>(n + 1) * 2 * (n + 1));
        saved_unassigned.resize(n + 2, 0);
    }

    bool budget_hit() {
        if (nodes > budget.max_nodes) {
            out_of_budget = true;
            return true;
        }
        if ((nodes & 1023) == 0 && clock.elapsed_ms() > budget.max_millis) {
            out_of_budget = true;
            return true;
        }
        return false;
    }

    void save(int depth) {
        std::size_t block = static_cast<std::size_t>(n + 1) * words;
        std::memcpy(saved_bits.data() + depth * 2 * block, domain.data(),
                    block * sizeof(std::uint64_t));
        std::memcpy(saved_bits.data() + depth * 2 * block + block, missing.data(),
                    block * sizeof(std::uint64_t));
        std::memcpy(saved_ints.data() + depth * 2 * (n + 1), color.data(), (n + 1) * sizeof(int));
        std::memcpy(saved_ints.data() + depth * 2 * (n + 1) + (n + 1), free_nbrs.data(),
                    (n + 1) * sizeof(int));
        saved_unassigned[depth] = unassigned;
    }

    void restore(int depth) {
        std::size_t block = static_cast<std::size_t>(n + 1) * words;
        std::memcpy(domain.data(), saved_bits.data() + depth * 2 * block,
                    block * sizeof(std::uint64_t));
        std::memcpy(missing.data(), saved_bits.data() + depth * 2 * block + block,
                    block * sizeof(std::uint64_t));
        std::memcpy(color.data(), saved_ints.data() + depth * 2 * (n + 1), (n + 1) * sizeof(int));
        std::memcpy(free_nbrs.data(), saved_ints.data() + depth * 2 * (n + 1) + (n + 1),
                    (n + 1) * sizeof(int));
        unassigned = saved_unassigned[depth];
    }

    int pick() const {
        int best = 0, best_count = 0;
        for (int v = 1; v <= n; ++v) {
            if (color[v])
                continue;
            int cnt = 0;
            const std::uint64_t* r = domain.data() + static_cast<std::size_t>(v) * words;
            for (int w = 0; w < words; ++w)
                cnt += __builtin_popcountll(r[w]);
            if (best == 0 || cnt < best_count ||
                (cnt == best_count && g.degree(v) > g.degree(best)))
                best = v, best_count = cnt;
        }
        return best;
    }

    bool assign(int v, int c) {
        color[v] = c;
        --unassigned;
        for (int w : g.neighbors(v))
            --free_nbrs[w];

        if (need_surj) {
            std::uint64_t* mv = row(missing, v);
            std::memcpy(mv, host_row(c), words * sizeof(std::uint64_t));
            for (int w : g.neighbors(v))
                if (color[w]) {
                    clear_bit(mv, color[w]);
                    clear_bit(row(missing, w), c);
                }
        }

        for (int w : g.neighbors(v)) {
            if (color[w])
                continue;
            std::uint64_t* dw = row(domain, w);
            const std::uint64_t* hc = host_row(c);
            bool nonempty = false;
            for (int i = 0; i < words; ++i) {
                dw[i] &= hc[i];
                nonempty |= dw[i] != 0;
            }
            if (!nonempty)
                return false;
        }
        if (need_inj)
            for (int x : dist2[v]) {
                if (color[x])
                    continue;
                std::uint64_t* dx = row(domain, x);
                clear_bit(dx, c);
                if (empty_row(dx))
                    return false;
            }

        if (need_surj) {
            // every missed color needs an unassigned neighbor able to take it
            for (int u = 1; u <= n; ++u) {
                if (!color[u])
                    continue;
                const std::uint64_t* mu = row(missing, u);
                int missing_count = popcount_row(mu);
                if (missing_count == 0)
                    continue;
                if (missing_count > free_nbrs[u])
                    return false;
                for (int w = 0; w < words; ++w) {
                    std::uint64_t bits = mu[w];
                    while (bits) {
                        int p = w * 64 + __builtin_ctzll(bits);
                        bits &= bits - 1;
                        bool supported = false;
                        for (int nb : g.neighbors(u))
                            if (!color[nb] && test_bit(row(domain, nb), p)) {
                                supported = true;
                                break;
                            }
                        if (!supported)
                            return false;
                    }
                }
            }
        }
        return true;
    }

    bool dfs(int depth) {
        if (unassigned == 0)
            return true;
        int v = pick();
        std::vector<int> candidates;
        const std::uint64_t* dv = domain.data() + static_cast<std::size_t>(v) * words;
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = dv[w];
            while (bits) {
                candidates.push_back(w * 64 + __builtin_ctzll(bits));
                bits &= bits - 1;
            }
        }
        for (int c : candidates) {
            ++nodes;
            if (budget_hit())
                return false;
            save(depth);
            if (assign(v, c) && dfs(depth + 1))
                return true;
            restore(depth);
            if (out_of_budget)
                return false;
        }
        return false;
    }
};

} // namespace

SolveResult solve_bf(const Graph& guest, const Graph& host, Variant variant, SearchBudget budget) {
    if (budget.max_nodes == 0 || budget.max_millis <= 0)
        throw ValidationError("search budget must be positive");

    SolveResult result;
    if (guest.vertex_count() == 0) {
        result.decision = Decision::yes;
        result.witness = VertexMap{&guest, &host, std::vector<int>(1, 0)};
        return result;
    }

    Searcher search(guest, host, variant, budget);
    for (int v = 1; v <= guest.vertex_count(); ++v)
        if (search.empty_row(search.row(search.domain, v))) {
            result.decision = Decision::no;
            return result;
        }

    bool found = search.dfs(0);
    result.nodes = search.nodes;
    if (search.out_of_budget) {
        result.decision = Decision::budget_exceeded;
        return result;
    }
    if (!found) {
        result.decision = Decision::no;
        return result;
    }
    VertexMap witness{&guest, &host, search.color};
    verify_witness(witness, variant);
    result.decision = Decision::yes;
    result.witness = std::move(witness);
    return result;
}

SolveResult solve_bf_unpruned(const Graph& guest, const Graph& host, Variant variant,
                              SearchBudget budget) {
    if (budget.max_nodes == 0 || budget.max_millis <= 0)
        throw ValidationError("search budget must be positive");

    const int n = guest.vertex_count();
    const int hn = host.vertex_count();
    SolveResult result;
    if (n == 0) {
        result.decision = Decision::yes;
        result.witness = VertexMap{&guest, &host, std::vector<int>(1, 0)};
        return result;
    }
    if (hn == 0) {
        result.decision = Decision::no;
        return result;
    }

    Clock clock;
    std::vector<int> image(n + 1, 1);
    auto mode = locality_of(variant);
    while (true) {
        ++result.nodes;
        if (result.nodes > budget.max_nodes ||
            ((result.nodes & 255) == 0 && clock.elapsed_ms() > budget.max_millis)) {
            result.decision = Decision::budget_exceeded;
            return result;
        }

        VertexMap f{&guest, &host, image};
        if (is_homomorphism(f) && (!mode || check_local(f, *mode).ok)) {
            result.decision = Decision::yes;
            result.witness = std::move(f);
            return result;
        }

        int v = n;
        while (v >= 1 && image[v] == hn)
            image[v--] = 1;
        if (v == 0)
            break;
        ++image[v];
    }
    result.decision = Decision::no;
    return result;
}

void ThreePartitionInstance::validate() const {
    if (group_count < 1)
        throw ValidationError("group count m must be at least 1, got " +
                              std::to_string(group_count));
    if (static_cast<int>(elements.size()) != 3 * group_count)
        throw ValidationError("expected 3m = " + std::to_string(3 * group_count) +
                              " elements, got " + std::to_string(elements.size()));
    long long sum = 0;
    for (long long a : elements) {
        if (a < 1)
            throw ValidationError("elements must be positive integers, got " + std::to_string(a));
        sum += a;
    }
    long long want = static_cast<long long>(group_count) * target_sum;
    if (sum != want)
        throw ValidationError("elements sum to " + std::to_string(sum) + ", expected m*b = " +
                              std::to_string(want));
    for (std::size_t i = 0; i < elements.size(); ++i) {
        long long a = elements[i];
        if (!(4 * a > target_sum))
            throw ValidationError("element " + std::to_string(i + 1) + " (= " + std::to_string(a) +
                                  ") violates b/4 < a_i");
        if (!(2 * a < target_sum))
            throw ValidationError("element " + std::to_string(i + 1) + " (= " + std::to_string(a) +
                                  ") violates a_i < b/2");
    }
}

namespace {

bool partition_search(const ThreePartitionInstance& inst, std::vector<char>& used,
                      std::set<std::vector<long long>>& dead,
                      std::vector<std::array<int, 3>>& groups) {
    const int total = static_cast<int>(inst.elements.size());
    int first = -1;
    for (int i = 0; i < total; ++i)
        if (!used[i]) {
            first = i;
            break;
        }
    if (first < 0)
        return true;

    std::vector<long long> residual;
    for (int i = 0; i < total; ++i)
        if (!used[i])
            residual.push_back(inst.elements[i]);
    std::sort(residual.begin(), residual.end());
    if (dead.count(residual))
        return false;

    for (int j = first + 1; j < total; ++j) {
        if (used[j])
            continue;
        for (int k = j + 1; k < total; ++k) {
            if (used[k])
                continue;
            if (inst.elements[first] + inst.elements[j] + inst.elements[k] != inst.target_sum)
                continue;
            used[first] = used[j] = used[k] = 1;
            groups.push_back({first, j, k});
            if (partition_search(inst, used, dead, groups))
                return true;
            groups.pop_back();
            used[first] = used[j] = used[k] = 0;
        }
    }
    dead.insert(std::move(residual));
    return false;
}

} // namespace

ThreePartitionResult three_partition_bf(const ThreePartitionInstance& inst) {
    inst.validate();
    ThreePartitionResult result;
    std::vector<char> used(inst.elements.size(), 0);
    std::set<std::vector<long long>> dead;
    result.yes = partition_search(inst, used, dead, result.groups);
    if (!result.yes)
        result.groups.clear();
    return result;
}

} // namespace locham
