#pragma once

// Maximum bipartite matching (Hopcroft-Karp), minimum edge cover with loops
// permitted, and the gadget mapping edge-cover instances into SCSS_3 inputs.

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "meg/graph.hpp"

namespace meg {

class cover_error : public std::runtime_error {
public:
    enum class kind { not_bipartite, isolated_vertex, bad_instance };

    cover_error(kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    kind error_kind() const { return kind_; }

private:
    kind kind_;
};

// Undirected graph with stable edge ids; a pair (v, v) encodes a loop and
// parallel edges are permitted.
struct UndirectedCoverGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    bool is_loop(int id) const { return edges[id].first == edges[id].second; }
};

struct Matching {
    std::vector<int> edge_ids;  // ascending, pairwise vertex-disjoint, no loops
};

struct EdgeCover {
    std::vector<int> edge_ids;  // ascending; every vertex touched
};

namespace detail {

// 2-colors the loop-free part; loops constrain nothing. Throws on odd cycles.
inline std::vector<int> bipartition(const UndirectedCoverGraph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count);
    for (const auto& [a, b] : g.edges) {
        if (a < 0 || a >= g.vertex_count || b < 0 || b >= g.vertex_count)
            throw cover_error(cover_error::kind::bad_instance, "edge endpoint out of range");
        if (a == b) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> color(g.vertex_count, -1);
    for (int s = 0; s < g.vertex_count; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    throw cover_error(cover_error::kind::not_bipartite,
                                      "graph has an odd cycle");
                }
            }
        }
    }
    return color;
}

}  // namespace detail

// Hopcroft-Karp over the non-loop edges. Neighbors are visited in edge-id
// order, so ties break deterministically towards smaller ids.
inline Matching max_matching(const UndirectedCoverGraph& g) {
    auto color = detail::bipartition(g);
    const int n = g.vertex_count;
    // Adjacency from the left side only, (neighbor, edge id) in id order.
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int id = 0; id < static_cast<int>(g.edges.size()); ++id) {
        auto [a, b] = g.edges[id];
        if (a == b) continue;
        if (color[a] != 0) std::swap(a, b);
        adj[a].push_back({b, id});
    }

    std::vector<int> match(n, -1);       // vertex -> matched partner
    std::vector<int> match_edge(n, -1);  // vertex -> matching edge id
    const int inf = std::numeric_limits<int>::max();
    std::vector<int> dist(n);

    auto bfs = [&]() {
        std::queue<int> q;
        for (int v = 0; v < n; ++v) {
            if (color[v] == 0 && match[v] == -1 && !adj[v].empty()) {
                dist[v] = 0;
                q.push(v);
            } else {
                dist[v] = inf;
            }
        }
        bool reachable_free = false;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, id] : adj[v]) {
                (void)id;
                int next = match[w];
                if (next == -1) {
                    reachable_free = true;
                } else if (dist[next] == inf) {
                    dist[next] = dist[v] + 1;
                    q.push(next);
                }
            }
        }
        return reachable_free;
    };

    std::function<bool(int)> augment = [&](int v) {
        for (auto [w, id] : adj[v]) {
            int next = match[w];
            if (next == -1 || (dist[next] == dist[v] + 1 && augment(next))) {
                match[v] = w;
                match[w] = v;
                match_edge[v] = id;
                match_edge[w] = id;
                return true;
            }
        }
        dist[v] = inf;
        return false;
    };

    while (bfs()) {
        for (int v = 0; v < n; ++v)
            if (color[v] == 0 && match[v] == -1 && !adj[v].empty()) augment(v);
    }

    Matching m;
    for (int v = 0; v < n; ++v)
        if (color[v] == 0 && match_edge[v] != -1) m.edge_ids.push_back(match_edge[v]);
    std::sort(m.edge_ids.begin(), m.edge_ids.end());
    return m;
}

// Loops are forced only at loop-only vertices; elsewhere a maximum matching is
// extended with the smallest-id incident non-loop edge per uncovered vertex.
inline EdgeCover min_edge_cover(const UndirectedCoverGraph& g) {
    std::vector<int> first_nonloop(g.vertex_count, -1);
    std::vector<int> first_loop(g.vertex_count, -1);
    for (int id = 0; id < static_cast<int>(g.edges.size()); ++id) {
        auto [a, b] = g.edges[id];
        if (a == b) {
            if (first_loop[a] == -1) first_loop[a] = id;
        } else {
            if (first_nonloop[a] == -1) first_nonloop[a] = id;
            if (first_nonloop[b] == -1) first_nonloop[b] = id;
        }
    }
    for (int v = 0; v < g.vertex_count; ++v)
        if (first_nonloop[v] == -1 && first_loop[v] == -1)
            throw cover_error(cover_error::kind::isolated_vertex,
                              "vertex " + std::to_string(v) + " is isolated");

    Matching m = max_matching(g);
    std::vector<bool> covered(g.vertex_count, false);
    std::set<int> chosen(m.edge_ids.begin(), m.edge_ids.end());
    for (int id : m.edge_ids) {
        covered[g.edges[id].first] = true;
        covered[g.edges[id].second] = true;
    }
    for (int v = 0; v < g.vertex_count; ++v) {
        if (covered[v]) continue;
        int pick = first_nonloop[v] != -1 ? first_nonloop[v] : first_loop[v];
        chosen.insert(pick);
        covered[g.edges[pick].first] = true;
        covered[g.edges[pick].second] = true;
    }
    return EdgeCover{std::vector<int>(chosen.begin(), chosen.end())};
}

// Builds the digraph whose minimum SCSS size equals (minimum edge cover size)
// + |left| + |right|: a root feeding every left vertex and fed by every right
// vertex, with each bipartite edge directed left to right. Vertex i of the
// input becomes i + 1; the root is 0.
inline DirectedGraph edge_cover_to_scss3(const UndirectedCoverGraph& bipartite,
                                         const std::set<int>& left) {
    std::vector<bool> touched(bipartite.vertex_count, false);
    for (int id = 0; id < static_cast<int>(bipartite.edges.size()); ++id) {
        auto [a, b] = bipartite.edges[id];
        if (a == b)
            throw cover_error(cover_error::kind::bad_instance, "loops not allowed in gadget");
        if (left.count(a) == left.count(b))
            throw cover_error(cover_error::kind::bad_instance,
                              "edge does not cross the bipartition");
        touched[a] = touched[b] = true;
    }
    for (int v = 0; v < bipartite.vertex_count; ++v)
        if (!touched[v])
            throw cover_error(cover_error::kind::isolated_vertex,
                              "vertex " + std::to_string(v) + " is isolated");

    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (int v = 0; v < bipartite.vertex_count; ++v)
        if (left.count(v)) pairs.push_back({0, v + 1});
    for (int v = 0; v < bipartite.vertex_count; ++v)
        if (!left.count(v)) pairs.push_back({v + 1, 0});
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : bipartite.edges) {
        int l = left.count(a) ? a : b;
        int r = left.count(a) ? b : a;
        if (seen.insert({l, r}).second) pairs.push_back({l + 1, r + 1});
    }
    return build_graph(bipartite.vertex_count + 1, pairs);
}

}  // namespace meg
