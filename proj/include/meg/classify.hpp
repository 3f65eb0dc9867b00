#pragma once

// Edge classification for strongly connected digraphs whose cycles have at
// most three edges: necessary/redundant labels, unsatisfied edges, the unique
// cycle of each redundant edge, and the undirected cover instance G'.

#include <map>
#include <set>
#include <vector>

#include "meg/graph.hpp"

namespace meg {

class solver_error : public std::runtime_error {
public:
    enum class kind {
        not_strongly_connected,
        long_cycle,
        precondition,
        uncovered_edge,
        infeasible,
    };

    solver_error(kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    kind error_kind() const { return kind_; }

private:
    kind kind_;
};

enum class EdgeClass { Necessary, Redundant };

struct Classification {
    std::vector<EdgeClass> edge_class;
    std::set<EdgeId> unsatisfied;
    std::map<EdgeId, Cycle> redundant_cycle;          // redundant edge -> its unique cycle
    std::map<EdgeId, std::vector<EdgeId>> provides;   // redundant edge -> unsatisfied edges
};

// One vertex per unsatisfied edge of G; one edge (or loop) per redundant edge
// that provides a cycle for two (or one) of them.
struct CoverInstance {
    struct CoverEdge {
        int a;
        int b;           // a == b encodes a loop
        EdgeId origin;   // the redundant edge of G this came from
    };
    int vertex_count = 0;
    std::vector<CoverEdge> cover_edges;
    std::vector<EdgeId> vertex_origin;  // G' vertex -> unsatisfied EdgeId of G
};

// Definition-level classifier: an edge is redundant iff deleting it leaves
// the graph strongly connected. Works on any strongly connected digraph.
inline EdgeClass classify_edge_naive(const DirectedGraph& g, EdgeId e) {
    g.check_edge_id(e);
    if (!is_strongly_connected(g))
        throw solver_error(solver_error::kind::not_strongly_connected,
                           "classify requires a strongly connected graph");
    std::vector<EdgeId> rest;
    rest.reserve(g.edge_count() - 1);
    for (EdgeId id = 0; id < g.edge_count(); ++id)
        if (id != e) rest.push_back(id);
    return is_strongly_connected_on(g, rest) ? EdgeClass::Redundant : EdgeClass::Necessary;
}

namespace detail {

// DFS branchings from a fixed root: an outgoing spanning tree over out-edges
// and an incoming one over in-edges. Their union strongly connects the graph,
// so every edge outside it is redundant.
inline std::vector<bool> branching_union(const DirectedGraph& g, VertexId root) {
    std::vector<bool> in_b(g.edge_count(), false);
    auto dfs = [&](bool outgoing) {
        std::vector<bool> seen(g.vertex_count(), false);
        std::vector<VertexId> stack{root};
        seen[root] = true;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (auto [w, id] : outgoing ? g.out(v) : g.in(v)) {
                if (seen[w]) continue;
                seen[w] = true;
                in_b[id] = true;
                stack.push_back(w);
            }
        }
    };
    dfs(true);
    dfs(false);
    return in_b;
}

}  // namespace detail

// O(n^2) classifier. Preconditions: strongly connected, max cycle length <= 3,
// at least four vertices, no cut vertices.
inline std::vector<EdgeClass> classify_edges(const DirectedGraph& g) {
    if (!is_strongly_connected(g))
        throw solver_error(solver_error::kind::not_strongly_connected,
                           "classify_edges requires a strongly connected graph");
    if (g.vertex_count() < 4)
        throw solver_error(solver_error::kind::precondition,
                           "classify_edges requires at least four vertices");
    if (!block_decomposition(g).cut_vertices.empty())
        throw solver_error(solver_error::kind::precondition,
                           "classify_edges requires a graph without cut vertices");
    if (!max_cycle_length_at_most(g, 3))
        throw solver_error(solver_error::kind::long_cycle,
                           "classify_edges requires maximum cycle length 3");

    auto in_b = detail::branching_union(g, 0);
    std::vector<EdgeClass> cls(g.edge_count(), EdgeClass::Redundant);

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!in_b[e]) continue;  // outside the branchings: redundant
        VertexId u = g.edge(e).tail, v = g.edge(e).head;

        // Case 1: alternate u -> x -> v path.
        bool alt2 = false;
        for (auto [x, id] : g.out(u)) {
            (void)id;
            if (x != v && g.find_edge(x, v)) {
                alt2 = true;
                break;
            }
        }
        if (alt2) continue;

        // Case 2: antiparallel edge present; any alternate path would have
        // length two, and none exists.
        if (g.find_edge(v, u)) {
            cls[e] = EdgeClass::Necessary;
            continue;
        }

        // Count return paths v -> w -> u.
        std::vector<VertexId> returns;
        for (auto [w, id] : g.out(v)) {
            (void)id;
            if (w != u && g.find_edge(w, u)) returns.push_back(w);
        }
        if (returns.size() >= 2) {  // Case 3: two cycles through e would be needed
            cls[e] = EdgeClass::Necessary;
            continue;
        }
        if (returns.empty())
            throw solver_error(solver_error::kind::precondition,
                               "edge has no short return path; preconditions violated");

        // Case 4: unique return path (v, w, u). Redundant iff walks u ~> w and
        // w ~> v of length <= 2 both exist, neither using edge (u, v).
        VertexId w = returns[0];
        auto walk2 = [&](VertexId from, VertexId to, VertexId banned_mid) {
            if (g.find_edge(from, to)) return true;
            for (auto [z, id] : g.out(from)) {
                (void)id;
                if (z != to && z != banned_mid && g.find_edge(z, to)) return true;
            }
            return false;
        };
        // u -> z -> w must not start with edge (u, v); w -> z -> v must not
        // end with edge (u, v).
        if (walk2(u, w, v) && walk2(w, v, u)) {
            // stays Redundant
        } else {
            cls[e] = EdgeClass::Necessary;
        }
    }
    return cls;
}

// An edge (u, v) is unsatisfied iff it is necessary and no return path of one
// or two necessary edges exists; longer return paths cannot exist when every
// cycle has at most three edges.
inline std::set<EdgeId> compute_unsatisfied(const DirectedGraph& g,
                                            const std::vector<EdgeClass>& edge_class) {
    std::set<EdgeId> result;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (edge_class[e] != EdgeClass::Necessary) continue;
        VertexId u = g.edge(e).tail, v = g.edge(e).head;
        bool satisfied = false;
        if (auto back = g.find_edge(v, u); back && edge_class[*back] == EdgeClass::Necessary)
            satisfied = true;
        if (!satisfied) {
            for (auto [w, id1] : g.out(v)) {
                if (edge_class[id1] != EdgeClass::Necessary || w == u) continue;
                if (auto id2 = g.find_edge(w, u);
                    id2 && edge_class[*id2] == EdgeClass::Necessary) {
                    satisfied = true;
                    break;
                }
            }
        }
        if (!satisfied) result.insert(e);
    }
    return result;
}

// The unique simple cycle through a redundant edge: its return path has one or
// two edges. Prefers the direct antiparallel edge, then the smallest midpoint.
inline Cycle redundant_cycle(const DirectedGraph& g, const std::vector<EdgeClass>& edge_class,
                             EdgeId e) {
    g.check_edge_id(e);
    if (edge_class[e] != EdgeClass::Redundant)
        throw solver_error(solver_error::kind::precondition,
                           "redundant_cycle requires a redundant edge");
    VertexId u = g.edge(e).tail, v = g.edge(e).head;
    Cycle c;
    if (auto back = g.find_edge(v, u)) {
        c.vertices = {u, v};
        c.edge_ids = {e, *back};
    } else {
        for (auto [w, id1] : g.out(v)) {
            if (w == u) continue;
            if (auto id2 = g.find_edge(w, u)) {
                c.vertices = {u, v, w};
                c.edge_ids = {e, id1, *id2};
                break;
            }
        }
        if (c.vertices.empty())
            throw solver_error(solver_error::kind::precondition,
                               "redundant edge has no short return path");
    }
    c.canonicalize();
    return c;
}

// Full classification in O(n^2): fast per-edge labels, then one sweep over all
// paths of one or two necessary edges to settle satisfaction and to hand every
// redundant closing edge its return path.
inline Classification classify(const DirectedGraph& g) {
    Classification result;
    result.edge_class = classify_edges(g);

    std::vector<bool> satisfied(g.edge_count(), false);
    auto note_path = [&](VertexId a, VertexId c, const std::vector<VertexId>& mids,
                         const std::vector<EdgeId>& path_ids) {
        // Necessary path a ~> c; look at the closing edge (c, a).
        auto closing = g.find_edge(c, a);
        if (!closing) return;
        if (result.edge_class[*closing] == EdgeClass::Necessary) {
            satisfied[*closing] = true;
        } else if (!result.redundant_cycle.count(*closing)) {
            Cycle cyc;
            cyc.vertices = {c, a};
            cyc.vertices.insert(cyc.vertices.end(), mids.begin(), mids.end());
            cyc.edge_ids = {*closing};
            cyc.edge_ids.insert(cyc.edge_ids.end(), path_ids.begin(), path_ids.end());
            cyc.canonicalize();
            result.redundant_cycle.emplace(*closing, std::move(cyc));
        }
    };

    // Length-1 necessary paths first so each redundant edge's shortest return
    // path wins, then length-2 paths by ascending midpoint.
    for (EdgeId id = 0; id < g.edge_count(); ++id)
        if (result.edge_class[id] == EdgeClass::Necessary)
            note_path(g.edge(id).tail, g.edge(id).head, {}, {id});
    for (VertexId mid = 0; mid < g.vertex_count(); ++mid) {
        for (auto [a, id1] : g.in(mid)) {
            if (result.edge_class[id1] != EdgeClass::Necessary) continue;
            for (auto [c, id2] : g.out(mid)) {
                if (result.edge_class[id2] != EdgeClass::Necessary || c == a) continue;
                note_path(a, c, {mid}, {id1, id2});
            }
        }
    }

    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (result.edge_class[e] == EdgeClass::Necessary && !satisfied[e])
            result.unsatisfied.insert(e);

    for (auto& [e, cyc] : result.redundant_cycle) {
        std::vector<EdgeId> prov;
        for (EdgeId other : cyc.edge_ids)
            if (other != e && result.unsatisfied.count(other)) prov.push_back(other);
        std::sort(prov.begin(), prov.end());
        result.provides.emplace(e, std::move(prov));
    }
    return result;
}

// G' vertices are numbered by ascending unsatisfied edge id; G' edges listed
// by ascending redundant edge id. Providers of nothing contribute nothing.
inline CoverInstance build_cover_instance(const DirectedGraph& g,
                                          const Classification& classification) {
    (void)g;
    CoverInstance inst;
    std::map<EdgeId, int> vertex_of;
    for (EdgeId e : classification.unsatisfied) {
        vertex_of[e] = inst.vertex_count++;
        inst.vertex_origin.push_back(e);
    }
    for (const auto& [e, prov] : classification.provides) {
        if (prov.empty()) continue;
        if (prov.size() == 1) {
            int a = vertex_of.at(prov[0]);
            inst.cover_edges.push_back({a, a, e});
        } else {
            inst.cover_edges.push_back({vertex_of.at(prov[0]), vertex_of.at(prov[1]), e});
        }
    }
    return inst;
}

}  // namespace meg
