#pragma once

// Digraph substrate: strong connectivity, condensation, biconnected blocks
// of the underlying multigraph, bounded cycle search, and cycle contraction.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace meg {

using VertexId = int;
using EdgeId = int;

class graph_error : public std::runtime_error {
public:
    enum class kind {
        out_of_range,
        self_loop,
        duplicate_edge,
        unknown_edge,
        bad_partition,
        bad_argument,
    };

    graph_error(kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    kind error_kind() const { return kind_; }

private:
    kind kind_;
};

struct Edge {
    VertexId tail;
    VertexId head;
};

// Immutable digraph. Edge ids are positions in the construction list; no
// self-loops, no duplicate (tail, head) pairs. Adjacency lists are sorted by
// neighbor id so that every traversal in the library is deterministic.
class DirectedGraph {
public:
    DirectedGraph() = default;

    DirectedGraph(int vertex_count, std::vector<Edge> edges)
        : vertex_count_(vertex_count), edges_(std::move(edges)) {
        if (vertex_count_ < 0)
            throw graph_error(graph_error::kind::bad_argument, "negative vertex count");
        std::set<std::pair<VertexId, VertexId>> seen;
        for (const Edge& e : edges_) {
            if (e.tail < 0 || e.tail >= vertex_count_ || e.head < 0 || e.head >= vertex_count_)
                throw graph_error(graph_error::kind::out_of_range,
                                  "edge endpoint out of range: (" + std::to_string(e.tail) +
                                      ", " + std::to_string(e.head) + ")");
            if (e.tail == e.head)
                throw graph_error(graph_error::kind::self_loop,
                                  "self-loop at vertex " + std::to_string(e.tail));
            if (!seen.insert({e.tail, e.head}).second)
                throw graph_error(graph_error::kind::duplicate_edge,
                                  "duplicate edge (" + std::to_string(e.tail) + ", " +
                                      std::to_string(e.head) + ")");
        }
        out_.assign(vertex_count_, {});
        in_.assign(vertex_count_, {});
        for (EdgeId id = 0; id < static_cast<EdgeId>(edges_.size()); ++id) {
            out_[edges_[id].tail].push_back({edges_[id].head, id});
            in_[edges_[id].head].push_back({edges_[id].tail, id});
        }
        for (auto& a : out_) std::sort(a.begin(), a.end());
        for (auto& a : in_) std::sort(a.begin(), a.end());
    }

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId id) const {
        check_edge_id(id);
        return edges_[id];
    }

    const std::vector<Edge>& edges() const { return edges_; }

    // (neighbor, edge id), sorted by neighbor.
    const std::vector<std::pair<VertexId, EdgeId>>& out(VertexId v) const { return out_[v]; }
    const std::vector<std::pair<VertexId, EdgeId>>& in(VertexId v) const { return in_[v]; }

    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const {
        if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_) return std::nullopt;
        const auto& a = out_[u];
        auto it = std::lower_bound(a.begin(), a.end(), std::pair<VertexId, EdgeId>{v, -1});
        if (it != a.end() && it->first == v) return it->second;
        return std::nullopt;
    }

    void check_edge_id(EdgeId id) const {
        if (id < 0 || id >= edge_count())
            throw graph_error(graph_error::kind::unknown_edge,
                              "unknown edge id " + std::to_string(id));
    }

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> out_;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> in_;
};

inline DirectedGraph build_graph(int vertex_count,
                                 const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v});
    return DirectedGraph(vertex_count, std::move(edges));
}

// A simple directed cycle; vertices[i] -> vertices[i+1 mod len] is edge_ids[i].
// Stored rotated so the smallest vertex comes first.
struct Cycle {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edge_ids;

    int length() const { return static_cast<int>(edge_ids.size()); }

    void canonicalize() {
        if (vertices.empty()) return;
        auto it = std::min_element(vertices.begin(), vertices.end());
        auto shift = static_cast<size_t>(it - vertices.begin());
        std::rotate(vertices.begin(), vertices.begin() + shift, vertices.end());
        std::rotate(edge_ids.begin(), edge_ids.begin() + shift, edge_ids.end());
    }
};

struct BlockDecomposition {
    std::vector<std::vector<EdgeId>> blocks;  // each sorted; blocks sorted by first id
    std::set<VertexId> cut_vertices;
};

struct ContractionResult {
    DirectedGraph graph;
    std::vector<VertexId> vertex_map;                  // old vertex -> new vertex
    std::vector<std::vector<EdgeId>> edge_provenance;  // new edge -> original ids, ascending
};

struct Condensation {
    DirectedGraph dag;                       // one vertex per SCC, topologically ordered
    std::vector<int> component_of;           // original vertex -> SCC index
    std::vector<EdgeId> representative_edge; // dag edge -> smallest qualifying original id
};

namespace detail {

struct TarjanState {
    const DirectedGraph& g;
    std::vector<int> index, low;
    std::vector<bool> on_stack;
    std::vector<VertexId> stack;
    int counter = 0;
    std::vector<std::vector<VertexId>> components;  // reverse topological order

    explicit TarjanState(const DirectedGraph& graph)
        : g(graph),
          index(graph.vertex_count(), -1),
          low(graph.vertex_count(), 0),
          on_stack(graph.vertex_count(), false) {}

    void visit(VertexId v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (auto [w, id] : g.out(v)) {
            (void)id;
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<VertexId> comp;
            VertexId w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            components.push_back(std::move(comp));
        }
    }
};

}  // namespace detail

// Components listed in a topological order of the condensation; vertices
// within a component ascend.
inline std::vector<std::vector<VertexId>> strongly_connected_components(const DirectedGraph& g) {
    detail::TarjanState st(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (st.index[v] < 0) st.visit(v);
    std::reverse(st.components.begin(), st.components.end());
    return st.components;
}

inline bool is_strongly_connected(const DirectedGraph& g) {
    if (g.vertex_count() <= 1) return true;
    return strongly_connected_components(g).size() == 1;
}

inline Condensation condensation(const DirectedGraph& g) {
    auto comps = strongly_connected_components(g);
    Condensation result;
    result.component_of.assign(g.vertex_count(), -1);
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
        for (VertexId v : comps[c]) result.component_of[v] = c;

    std::set<std::pair<int, int>> seen;
    std::vector<Edge> dag_edges;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        int cu = result.component_of[g.edge(id).tail];
        int cv = result.component_of[g.edge(id).head];
        if (cu == cv) continue;
        if (seen.insert({cu, cv}).second) {
            dag_edges.push_back({cu, cv});
            result.representative_edge.push_back(id);
        }
    }
    result.dag = DirectedGraph(static_cast<int>(comps.size()), std::move(dag_edges));
    return result;
}

namespace detail {

// Hopcroft-Tarjan on the underlying undirected multigraph: each directed edge
// is its own undirected edge, so an antiparallel pair forms a 2-edge block.
struct BlockState {
    const DirectedGraph& g;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj;
    std::vector<int> num, low;
    std::vector<EdgeId> edge_stack;
    std::vector<std::vector<EdgeId>> blocks;
    std::set<VertexId> cut_vertices;
    int counter = 0;

    explicit BlockState(const DirectedGraph& graph)
        : g(graph), adj(graph.vertex_count()), num(graph.vertex_count(), -1),
          low(graph.vertex_count(), 0) {
        for (EdgeId id = 0; id < g.edge_count(); ++id) {
            adj[g.edge(id).tail].push_back({g.edge(id).head, id});
            adj[g.edge(id).head].push_back({g.edge(id).tail, id});
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
    }

    void pop_block(EdgeId until) {
        std::vector<EdgeId> block;
        EdgeId e;
        do {
            e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
        } while (e != until);
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }

    void visit(VertexId v, EdgeId parent_edge) {
        num[v] = low[v] = counter++;
        int children = 0;
        for (auto [w, id] : adj[v]) {
            if (id == parent_edge) continue;
            if (num[w] < 0) {
                ++children;
                edge_stack.push_back(id);
                visit(w, id);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) {
                    if (parent_edge != -1 || children > 1) cut_vertices.insert(v);
                    pop_block(id);
                }
            } else if (num[w] < num[v]) {
                edge_stack.push_back(id);
                low[v] = std::min(low[v], num[w]);
            }
        }
    }
};

}  // namespace detail

inline BlockDecomposition block_decomposition(const DirectedGraph& g) {
    detail::BlockState st(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (st.num[v] < 0 && !st.adj[v].empty()) st.visit(v, -1);
    std::sort(st.blocks.begin(), st.blocks.end());
    return {std::move(st.blocks), std::move(st.cut_vertices)};
}

// groups must partition [0, vertex_count); group i becomes new vertex i.
inline ContractionResult contract_vertices(const DirectedGraph& g,
                                           const std::vector<std::vector<VertexId>>& groups) {
    std::vector<VertexId> vmap(g.vertex_count(), -1);
    for (int gi = 0; gi < static_cast<int>(groups.size()); ++gi) {
        if (groups[gi].empty())
            throw graph_error(graph_error::kind::bad_partition, "empty group in partition");
        for (VertexId v : groups[gi]) {
            if (v < 0 || v >= g.vertex_count())
                throw graph_error(graph_error::kind::bad_partition,
                                  "partition vertex out of range");
            if (vmap[v] != -1)
                throw graph_error(graph_error::kind::bad_partition,
                                  "vertex " + std::to_string(v) + " appears twice");
            vmap[v] = gi;
        }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (vmap[v] == -1)
            throw graph_error(graph_error::kind::bad_partition,
                              "vertex " + std::to_string(v) + " missing from partition");

    ContractionResult result;
    result.vertex_map = std::move(vmap);
    std::vector<Edge> new_edges;
    std::map<std::pair<VertexId, VertexId>, int> slot;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        VertexId nu = result.vertex_map[g.edge(id).tail];
        VertexId nv = result.vertex_map[g.edge(id).head];
        if (nu == nv) continue;  // became a self-loop, dropped
        auto it = slot.find({nu, nv});
        if (it == slot.end()) {
            slot.emplace(std::pair{nu, nv}, static_cast<int>(new_edges.size()));
            new_edges.push_back({nu, nv});
            result.edge_provenance.push_back({id});
        } else {
            result.edge_provenance[it->second].push_back(id);
        }
    }
    result.graph = DirectedGraph(static_cast<int>(groups.size()), std::move(new_edges));
    return result;
}

namespace detail {

// Searches simple paths of exactly `t` vertices starting at each root in id
// order, restricted to vertices >= root, then closes the cycle with a BFS back
// to the root that avoids the path's interior. Any simple cycle of length >= t
// has such a witness rooted at its minimum vertex.
struct LongCycleSearch {
    const DirectedGraph& g;
    int t;
    VertexId root = 0;
    std::vector<bool> on_path;
    std::vector<VertexId> path;
    std::vector<EdgeId> path_edges;
    std::optional<Cycle> found;

    LongCycleSearch(const DirectedGraph& graph, int target)
        : g(graph), t(target), on_path(graph.vertex_count(), false) {}

    bool close_from(VertexId last) {
        // First try the direct closing edge, then a shortest detour.
        if (auto id = g.find_edge(last, root)) {
            found = Cycle{path, path_edges};
            found->edge_ids.push_back(*id);
            return true;
        }
        std::vector<EdgeId> via(g.vertex_count(), -1);
        std::queue<VertexId> q;
        q.push(last);
        std::vector<bool> seen(g.vertex_count(), false);
        seen[last] = true;
        while (!q.empty() && !seen[root]) {
            VertexId v = q.front();
            q.pop();
            for (auto [w, id] : g.out(v)) {
                if (w < root || seen[w]) continue;
                if (on_path[w] && w != root) continue;
                seen[w] = true;
                via[w] = id;
                if (w == root) break;
                q.push(w);
            }
        }
        if (!seen[root]) return false;
        std::vector<VertexId> tail_vertices;
        std::vector<EdgeId> tail_edges;
        VertexId v = root;
        while (v != last) {
            EdgeId id = via[v];
            tail_edges.push_back(id);
            v = g.edge(id).tail;
            if (v != last) tail_vertices.push_back(v);
        }
        std::reverse(tail_vertices.begin(), tail_vertices.end());
        std::reverse(tail_edges.begin(), tail_edges.end());
        found = Cycle{path, path_edges};
        found->vertices.insert(found->vertices.end(), tail_vertices.begin(), tail_vertices.end());
        found->edge_ids.insert(found->edge_ids.end(), tail_edges.begin(), tail_edges.end());
        return true;
    }

    bool extend(VertexId v, int depth) {
        if (depth == t) return close_from(v);
        for (auto [w, id] : g.out(v)) {
            if (w < root || on_path[w]) continue;
            on_path[w] = true;
            path.push_back(w);
            path_edges.push_back(id);
            if (extend(w, depth + 1)) return true;
            path_edges.pop_back();
            path.pop_back();
            on_path[w] = false;
        }
        return false;
    }

    std::optional<Cycle> run() {
        for (root = 0; root < g.vertex_count(); ++root) {
            on_path[root] = true;
            path = {root};
            path_edges.clear();
            if (extend(root, 1)) {
                found->canonicalize();
                return found;
            }
            on_path[root] = false;
        }
        return std::nullopt;
    }
};

}  // namespace detail

inline std::optional<Cycle> find_cycle_with_length_at_least(const DirectedGraph& g, int t) {
    if (t < 2) throw graph_error(graph_error::kind::bad_argument, "cycle length target must be >= 2");
    return detail::LongCycleSearch(g, t).run();
}

inline bool max_cycle_length_at_most(const DirectedGraph& g, int limit) {
    if (limit < 2) throw graph_error(graph_error::kind::bad_argument, "cycle length limit must be >= 2");
    return !find_cycle_with_length_at_least(g, limit + 1).has_value();
}

inline bool is_strongly_connected_on(const DirectedGraph& g,
                                     const std::vector<EdgeId>& edge_subset) {
    for (EdgeId id : edge_subset) g.check_edge_id(id);
    if (g.vertex_count() <= 1) return true;
    std::vector<std::vector<VertexId>> fwd(g.vertex_count()), bwd(g.vertex_count());
    for (EdgeId id : edge_subset) {
        fwd[g.edge(id).tail].push_back(g.edge(id).head);
        bwd[g.edge(id).head].push_back(g.edge(id).tail);
    }
    auto full = [&](const std::vector<std::vector<VertexId>>& adj) {
        std::vector<bool> seen(g.vertex_count(), false);
        std::vector<VertexId> q{0};
        seen[0] = true;
        while (!q.empty()) {
            VertexId v = q.back();
            q.pop_back();
            for (VertexId w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    q.push_back(w);
                }
        }
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    };
    return full(fwd) && full(bwd);
}

struct Subgraph {
    DirectedGraph graph;
    std::vector<VertexId> vertices;  // local vertex -> original vertex, ascending
    std::vector<EdgeId> edge_ids;    // local edge -> original edge, ascending
};

inline Subgraph subgraph_from_edges(const DirectedGraph& g, const std::vector<EdgeId>& ids) {
    Subgraph s;
    std::set<VertexId> verts;
    for (EdgeId id : ids) {
        g.check_edge_id(id);
        verts.insert(g.edge(id).tail);
        verts.insert(g.edge(id).head);
    }
    s.vertices.assign(verts.begin(), verts.end());
    std::map<VertexId, VertexId> local;
    for (int i = 0; i < static_cast<int>(s.vertices.size()); ++i) local[s.vertices[i]] = i;
    s.edge_ids = ids;
    std::sort(s.edge_ids.begin(), s.edge_ids.end());
    std::vector<Edge> edges;
    for (EdgeId id : s.edge_ids) edges.push_back({local[g.edge(id).tail], local[g.edge(id).head]});
    s.graph = DirectedGraph(static_cast<int>(s.vertices.size()), std::move(edges));
    return s;
}

inline Subgraph induced_subgraph(const DirectedGraph& g, const std::vector<VertexId>& vertices) {
    Subgraph s;
    s.vertices = vertices;
    std::sort(s.vertices.begin(), s.vertices.end());
    std::map<VertexId, VertexId> local;
    for (int i = 0; i < static_cast<int>(s.vertices.size()); ++i) local[s.vertices[i]] = i;
    std::vector<Edge> edges;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        auto tu = local.find(g.edge(id).tail);
        auto tv = local.find(g.edge(id).head);
        if (tu != local.end() && tv != local.end()) {
            edges.push_back({tu->second, tv->second});
            s.edge_ids.push_back(id);
        }
    }
    s.graph = DirectedGraph(static_cast<int>(s.vertices.size()), std::move(edges));
    return s;
}

}  // namespace meg
