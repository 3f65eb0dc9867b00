#pragma once

// Brute-force ground truth and instance generators. Everything here favors
// being obviously correct over being fast; caps guard the exponential parts.

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "meg/cover.hpp"
#include "meg/graph.hpp"

namespace meg {

class oracle_error : public std::runtime_error {
public:
    enum class kind { cap_exceeded, not_strongly_connected, generation_failed, bad_argument,
                      isolated_vertex };

    oracle_error(kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    kind error_kind() const { return kind_; }

private:
    kind kind_;
};

namespace detail {

// Calls fn on each subset of `universe` of the given size, in lexicographic
// order; stops when fn returns true.
template <typename F>
bool for_each_combination(const std::vector<int>& universe, int size, F&& fn) {
    const int m = static_cast<int>(universe.size());
    if (size > m) return false;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
        std::vector<int> subset;
        subset.reserve(size);
        for (int i : idx) subset.push_back(universe[i]);
        if (fn(subset)) return true;
        int i = size - 1;
        while (i >= 0 && idx[i] == m - size + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline std::vector<std::vector<bool>> closure(const DirectedGraph& g,
                                              const std::vector<EdgeId>& subset) {
    std::vector<std::vector<VertexId>> adj(g.vertex_count());
    for (EdgeId id : subset) adj[g.edge(id).tail].push_back(g.edge(id).head);
    std::vector<std::vector<bool>> reach(g.vertex_count(),
                                         std::vector<bool>(g.vertex_count(), false));
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        std::vector<VertexId> stack{s};
        reach[s][s] = true;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : adj[v])
                if (!reach[s][w]) {
                    reach[s][w] = true;
                    stack.push_back(w);
                }
        }
    }
    return reach;
}

}  // namespace detail

inline bool reachability_equal(const DirectedGraph& g, const std::vector<EdgeId>& subset) {
    for (EdgeId id : subset) g.check_edge_id(id);
    std::vector<EdgeId> all(g.edge_count());
    for (EdgeId id = 0; id < g.edge_count(); ++id) all[id] = id;
    return detail::closure(g, subset) == detail::closure(g, all);
}

// Minimum strongly connecting edge subset by enumeration, ascending in size.
// Edges whose single removal already disconnects the graph are forced in.
inline std::vector<EdgeId> min_scss_bruteforce(const DirectedGraph& g, int cap = 22) {
    if (g.edge_count() > cap)
        throw oracle_error(oracle_error::kind::cap_exceeded,
                           "edge count " + std::to_string(g.edge_count()) + " exceeds cap " +
                               std::to_string(cap));
    if (!is_strongly_connected(g))
        throw oracle_error(oracle_error::kind::not_strongly_connected,
                           "input is not strongly connected");
    if (g.vertex_count() <= 1) return {};

    std::vector<EdgeId> forced, optional;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        std::vector<EdgeId> rest;
        for (EdgeId id = 0; id < g.edge_count(); ++id)
            if (id != e) rest.push_back(id);
        (is_strongly_connected_on(g, rest) ? optional : forced).push_back(e);
    }
    for (int size = 0; size <= static_cast<int>(optional.size()); ++size) {
        std::vector<EdgeId> found;
        bool ok = detail::for_each_combination(optional, size, [&](const std::vector<int>& subset) {
            std::vector<EdgeId> candidate = forced;
            candidate.insert(candidate.end(), subset.begin(), subset.end());
            if (!is_strongly_connected_on(g, candidate)) return false;
            std::sort(candidate.begin(), candidate.end());
            found = std::move(candidate);
            return true;
        });
        if (ok) return found;
    }
    throw oracle_error(oracle_error::kind::not_strongly_connected, "unreachable");
}

// Minimum subset preserving the full reachability relation. Edges with no
// alternate path between their endpoints are forced in.
inline std::vector<EdgeId> min_equivalent_bruteforce(const DirectedGraph& g, int cap = 22) {
    if (g.edge_count() > cap)
        throw oracle_error(oracle_error::kind::cap_exceeded,
                           "edge count " + std::to_string(g.edge_count()) + " exceeds cap " +
                               std::to_string(cap));
    std::vector<EdgeId> forced, optional;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        std::vector<EdgeId> rest;
        for (EdgeId id = 0; id < g.edge_count(); ++id)
            if (id != e) rest.push_back(id);
        (reachability_equal(g, rest) ? optional : forced).push_back(e);
    }
    for (int size = 0; size <= static_cast<int>(optional.size()); ++size) {
        std::vector<EdgeId> found;
        bool ok = detail::for_each_combination(optional, size, [&](const std::vector<int>& subset) {
            std::vector<EdgeId> candidate = forced;
            candidate.insert(candidate.end(), subset.begin(), subset.end());
            if (!reachability_equal(g, candidate)) return false;
            std::sort(candidate.begin(), candidate.end());
            found = std::move(candidate);
            return true;
        });
        if (ok) return found;
    }
    throw oracle_error(oracle_error::kind::bad_argument, "unreachable");
}

inline EdgeCover min_edge_cover_bruteforce(const UndirectedCoverGraph& g, int cap = 22) {
    if (static_cast<int>(g.edges.size()) > cap)
        throw oracle_error(oracle_error::kind::cap_exceeded,
                           "edge count exceeds cap " + std::to_string(cap));
    std::vector<bool> touched(g.vertex_count, false);
    for (const auto& [a, b] : g.edges) touched[a] = touched[b] = true;
    for (int v = 0; v < g.vertex_count; ++v)
        if (!touched[v])
            throw oracle_error(oracle_error::kind::isolated_vertex,
                               "vertex " + std::to_string(v) + " is isolated");
    std::vector<int> all(g.edges.size());
    for (int i = 0; i < static_cast<int>(all.size()); ++i) all[i] = i;
    for (int size = 0; size <= static_cast<int>(all.size()); ++size) {
        EdgeCover found;
        bool ok = detail::for_each_combination(all, size, [&](const std::vector<int>& subset) {
            std::vector<bool> covered(g.vertex_count, false);
            for (int id : subset) {
                covered[g.edges[id].first] = true;
                covered[g.edges[id].second] = true;
            }
            for (int v = 0; v < g.vertex_count; ++v)
                if (!covered[v]) return false;
            found.edge_ids = subset;
            return true;
        });
        if (ok) return found;
    }
    throw oracle_error(oracle_error::kind::bad_argument, "unreachable");
}

// Length of the longest simple cycle, by exhaustive DFS rooted at each cycle's
// minimum vertex. Zero for acyclic graphs.
inline int max_cycle_length(const DirectedGraph& g, int vertex_cap = 10) {
    if (g.vertex_count() > vertex_cap)
        throw oracle_error(oracle_error::kind::cap_exceeded,
                           "vertex count exceeds cap " + std::to_string(vertex_cap));
    int best = 0;
    std::vector<bool> on_path(g.vertex_count(), false);
    std::vector<VertexId> path;
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
        auto dfs = [&](auto&& self, VertexId v) -> void {
            for (auto [w, id] : g.out(v)) {
                (void)id;
                if (w == root) best = std::max(best, static_cast<int>(path.size()));
                if (w <= root || on_path[w]) continue;
                on_path[w] = true;
                path.push_back(w);
                self(self, w);
                path.pop_back();
                on_path[w] = false;
            }
        };
        on_path[root] = true;
        path = {root};
        dfs(dfs, root);
        on_path[root] = false;
    }
    return best;
}

// Grows a strongly connected digraph with maximum cycle length 3 by attaching
// pendant 2-cycles, pendant triangles, and, where provably safe, triangles
// spanning two existing vertices. Deterministic per seed.
inline DirectedGraph gen_triangle_composite(int n_target, std::uint64_t seed) {
    if (n_target < 3)
        throw oracle_error(oracle_error::kind::bad_argument, "n_target must be >= 3");
    std::mt19937_64 rng(seed);
    int n = 3;
    std::vector<std::pair<VertexId, VertexId>> edges = {{0, 1}, {1, 2}, {2, 0}};
    std::set<std::pair<VertexId, VertexId>> present(edges.begin(), edges.end());
    std::vector<std::vector<VertexId>> out_adj(3), in_adj(3);
    auto add_edge = [&](VertexId a, VertexId b) {
        edges.push_back({a, b});
        present.insert({a, b});
        out_adj[a].push_back(b);
        in_adj[b].push_back(a);
    };
    out_adj[0] = {1}; out_adj[1] = {2}; out_adj[2] = {0};
    in_adj[1] = {0}; in_adj[2] = {1}; in_adj[0] = {2};

    int rejections = 0;
    const int rejection_budget = 10000;
    while (n < n_target) {
        int room = n_target - n;
        std::uniform_int_distribution<int> pick_move(0, room >= 2 ? 2 : 1);
        int move = pick_move(rng);
        std::uniform_int_distribution<int> pick_vertex(0, n - 1);
        if (move == 0) {  // pendant 2-cycle
            VertexId v = pick_vertex(rng);
            VertexId x = n++;
            out_adj.emplace_back();
            in_adj.emplace_back();
            add_edge(v, x);
            add_edge(x, v);
        } else if (move == 2) {  // pendant triangle
            VertexId v = pick_vertex(rng);
            VertexId x = n, y = n + 1;
            n += 2;
            out_adj.emplace_back();
            out_adj.emplace_back();
            in_adj.emplace_back();
            in_adj.emplace_back();
            add_edge(v, x);
            add_edge(x, y);
            add_edge(y, v);
        } else {  // triangle u -> x -> v over existing u, v; safe only when the
                  // sole route from v back to u is the direct edge (v, u)
            VertexId u = pick_vertex(rng), v = pick_vertex(rng);
            bool ok = u != v && present.count({v, u});
            if (ok) {
                // Reject if any out-neighbor of v other than u reaches u while
                // avoiding v; that route would close a cycle of length >= 4.
                std::vector<bool> reaches_u(n, false);
                std::vector<VertexId> stack{u};
                reaches_u[u] = true;
                while (!stack.empty()) {
                    VertexId a = stack.back();
                    stack.pop_back();
                    for (VertexId b : in_adj[a])
                        if (b != v && !reaches_u[b]) {
                            reaches_u[b] = true;
                            stack.push_back(b);
                        }
                }
                for (VertexId a : out_adj[v])
                    if (a != u && reaches_u[a]) {
                        ok = false;
                        break;
                    }
            }
            if (!ok) {
                if (++rejections > rejection_budget)
                    throw oracle_error(oracle_error::kind::generation_failed,
                                       "rejection budget exhausted");
                continue;
            }
            VertexId x = n++;
            out_adj.emplace_back();
            in_adj.emplace_back();
            add_edge(u, x);
            add_edge(x, v);
        }
    }
    return build_graph(n, edges);
}

inline DirectedGraph gen_random_sc_digraph(int n, double density, std::uint64_t seed) {
    if (n < 2) throw oracle_error(oracle_error::kind::bad_argument, "n must be >= 2");
    if (!(density > 0.0 && density <= 1.0))
        throw oracle_error(oracle_error::kind::bad_argument, "density must lie in (0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(density);
    const int budget = 1000;
    for (int attempt = 0; attempt < budget; ++attempt) {
        std::vector<std::pair<VertexId, VertexId>> pairs;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = 0; v < n; ++v)
                if (u != v && keep(rng)) pairs.push_back({u, v});
        DirectedGraph g = build_graph(n, pairs);
        if (is_strongly_connected(g)) return g;
    }
    throw oracle_error(oracle_error::kind::generation_failed,
                       "rejection budget exhausted; raise density");
}

}  // namespace meg
