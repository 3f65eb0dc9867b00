#pragma once

// Exact minimum strongly connected spanning subgraph for digraphs whose
// cycles have at most three edges: block decomposition, brute force on tiny
// blocks, and the classify -> edge cover -> reassembly pipeline elsewhere.

#include <algorithm>
#include <set>
#include <vector>

#include "meg/classify.hpp"
#include "meg/cover.hpp"
#include "meg/graph.hpp"

namespace meg {

// Necessary edges plus the chosen redundant providers. Every unsatisfied edge
// must be covered by some chosen edge's provides set.
inline std::vector<EdgeId> assemble_scss(const Classification& classification,
                                         const std::vector<EdgeId>& chosen) {
    std::set<EdgeId> covered;
    for (EdgeId e : chosen) {
        auto it = classification.provides.find(e);
        if (it == classification.provides.end())
            throw solver_error(solver_error::kind::precondition,
                               "chosen edge " + std::to_string(e) + " is not a provider");
        covered.insert(it->second.begin(), it->second.end());
    }
    for (EdgeId u : classification.unsatisfied)
        if (!covered.count(u))
            throw solver_error(solver_error::kind::uncovered_edge,
                               "unsatisfied edge " + std::to_string(u) + " is not covered");

    std::vector<EdgeId> result(chosen);
    for (EdgeId e = 0; e < static_cast<EdgeId>(classification.edge_class.size()); ++e)
        if (classification.edge_class[e] == EdgeClass::Necessary) result.push_back(e);
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

namespace detail {

// Exhaustive search over edge subsets in ascending size, lexicographic within
// a size. Only used for blocks with at most three vertices.
inline std::vector<EdgeId> scss_tiny_bruteforce(const DirectedGraph& g) {
    const int m = g.edge_count();
    std::vector<EdgeId> all(m);
    for (int i = 0; i < m; ++i) all[i] = i;
    for (int size = 0; size <= m; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            std::vector<EdgeId> subset;
            for (int i : idx) subset.push_back(all[i]);
            if (is_strongly_connected_on(g, subset)) return subset;
            int i = size - 1;
            while (i >= 0 && idx[i] == m - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw solver_error(solver_error::kind::infeasible, "block is not strongly connected");
}

inline std::vector<EdgeId> scss3_solve_block(const DirectedGraph& local) {
    if (local.vertex_count() <= 3) return scss_tiny_bruteforce(local);
    Classification cls = classify(local);
    CoverInstance inst = build_cover_instance(local, cls);
    UndirectedCoverGraph cover_graph{inst.vertex_count, {}};
    for (const auto& ce : inst.cover_edges) cover_graph.edges.push_back({ce.a, ce.b});
    EdgeCover cover = min_edge_cover(cover_graph);
    std::vector<EdgeId> chosen;
    for (int id : cover.edge_ids) chosen.push_back(inst.cover_edges[id].origin);
    return assemble_scss(cls, chosen);
}

}  // namespace detail

// Minimum SCSS of a strongly connected digraph with maximum cycle length 3.
// Solves each 2-connected block independently and unions the answers.
inline std::vector<EdgeId> scss3_minimum(const DirectedGraph& g) {
    if (g.vertex_count() <= 1) return {};
    if (!is_strongly_connected(g))
        throw solver_error(solver_error::kind::not_strongly_connected,
                           "input is not strongly connected");
    if (auto c = find_cycle_with_length_at_least(g, 4))
        throw solver_error(solver_error::kind::long_cycle,
                           "input has a cycle of length " + std::to_string(c->length()));

    std::vector<EdgeId> answer;
    for (const auto& block : block_decomposition(g).blocks) {
        Subgraph sub = subgraph_from_edges(g, block);
        for (EdgeId local : detail::scss3_solve_block(sub.graph))
            answer.push_back(sub.edge_ids[local]);
    }
    std::sort(answer.begin(), answer.end());
    return answer;
}

}  // namespace meg
