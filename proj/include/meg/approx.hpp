#pragma once

// Cycle-contraction approximation for the strongly connected spanning
// subgraph problem, the general minimum-equivalent-graph pipeline, the
// bounded-cycle lower bound, and the performance guarantee formulas.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <vector>

#include "meg/graph.hpp"
#include "meg/scss3.hpp"

namespace meg {

struct ContractionTrace {
    struct Phase {
        int threshold;                                   // cycles of >= threshold edges
        std::vector<std::vector<EdgeId>> cycles;         // original edge ids per cycle
        int vertices_remaining;                          // after the phase
    };
    std::vector<Phase> phases;
    DirectedGraph final_graph;
    std::vector<std::vector<EdgeId>> final_provenance;   // final edge -> original ids
    std::vector<VertexId> vertex_map;                    // original vertex -> final vertex
};

struct ApproxResult {
    std::vector<EdgeId> edges;
    ContractionTrace trace;
};

// Exact value of (n-1) * l / (l-1), kept rational so callers can ceil it.
struct Rational {
    long long num = 0;
    long long den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    long long ceil() const { return (num + den - 1) / den; }
};

inline Rational scss_lower_bound(long long n, long long l) {
    if (n < 2 || l < 2)
        throw graph_error(graph_error::kind::bad_argument, "scss_lower_bound requires n, l >= 2");
    long long num = (n - 1) * l;
    long long den = l - 1;
    long long g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

struct GuaranteeReport {
    double exact_bound = 0.0;
    double simplified_bound = 0.0;
    std::optional<double> bounded_cycle_bound;
};

// Ratio guarantees for threshold k: the finite-sum bound, its closed-form
// relaxation via pi^2/6, and the variant for inputs with no cycle longer
// than l.
inline GuaranteeReport performance_bounds(int k, std::optional<int> l = std::nullopt) {
    if (k < 4)
        throw graph_error(graph_error::kind::bad_argument, "performance_bounds requires k >= 4");
    if (l && *l < k)
        throw graph_error(graph_error::kind::bad_argument, "performance_bounds requires l >= k");
    double inv_squares = 0.0;
    for (int i = 1; i <= k - 1; ++i) inv_squares += 1.0 / (static_cast<double>(i) * i);
    GuaranteeReport report;
    report.exact_bound = 1.0 / (k - 1) + inv_squares - 1.0 / 36.0;
    report.simplified_bound = std::numbers::pi * std::numbers::pi / 6.0 - 1.0 / 36.0 +
                              1.0 / (static_cast<double>(k) * (k - 1));
    if (l) {
        double kk = k, ll = *l;
        report.bounded_cycle_bound =
            (1.0 / kk - 1.0 / ll) / (1.0 - 1.0 / kk) + inv_squares - 1.0 / 36.0;
    }
    return report;
}

namespace detail {

inline EdgeId smallest_original(const std::vector<EdgeId>& provenance) {
    return *std::min_element(provenance.begin(), provenance.end());
}

}  // namespace detail

// Contraction phases with thresholds k, k-1, ..., 4, then an exact solve on
// the residue (which has no cycle of four or more edges). Every solution edge
// is reported as the smallest original id its contracted edge represents.
// With exact_finish false the residue's edges are all taken instead, one
// representative per surviving edge.
inline ApproxResult scss_approx(const DirectedGraph& g, int k, bool exact_finish = true) {
    if (k < 4) throw graph_error(graph_error::kind::bad_argument, "scss_approx requires k >= 4");
    if (!is_strongly_connected(g))
        throw solver_error(solver_error::kind::not_strongly_connected,
                           "input is not strongly connected");

    ApproxResult result;
    DirectedGraph cur = g;
    std::vector<std::vector<EdgeId>> prov(g.edge_count());
    for (EdgeId id = 0; id < g.edge_count(); ++id) prov[id] = {id};
    std::vector<VertexId> vmap(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) vmap[v] = v;

    for (int t = k; t >= 4; --t) {
        ContractionTrace::Phase phase{t, {}, 0};
        while (auto cyc = find_cycle_with_length_at_least(cur, t)) {
            std::vector<EdgeId> original;
            for (EdgeId cur_id : cyc->edge_ids)
                original.push_back(detail::smallest_original(prov[cur_id]));
            std::sort(original.begin(), original.end());
            result.edges.insert(result.edges.end(), original.begin(), original.end());
            phase.cycles.push_back(std::move(original));

            std::vector<bool> on_cycle(cur.vertex_count(), false);
            for (VertexId v : cyc->vertices) on_cycle[v] = true;
            std::vector<std::vector<VertexId>> groups;
            groups.push_back(cyc->vertices);
            for (VertexId v = 0; v < cur.vertex_count(); ++v)
                if (!on_cycle[v]) groups.push_back({v});
            ContractionResult contracted = contract_vertices(cur, groups);

            std::vector<std::vector<EdgeId>> new_prov(contracted.graph.edge_count());
            for (EdgeId ne = 0; ne < contracted.graph.edge_count(); ++ne) {
                for (EdgeId old : contracted.edge_provenance[ne])
                    new_prov[ne].insert(new_prov[ne].end(), prov[old].begin(), prov[old].end());
                std::sort(new_prov[ne].begin(), new_prov[ne].end());
            }
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                vmap[v] = contracted.vertex_map[vmap[v]];
            prov = std::move(new_prov);
            cur = std::move(contracted.graph);
        }
        phase.vertices_remaining = cur.vertex_count();
        result.trace.phases.push_back(std::move(phase));
    }

    if (exact_finish) {
        std::vector<EdgeId> exact = scss3_minimum(cur);
        // Accounting check from the analysis: the optimum of the residue is at
        // most twice its vertex count minus two.
        if (static_cast<int>(exact.size()) > 2 * (cur.vertex_count() - 1) &&
            cur.vertex_count() > 1)
            throw std::logic_error("residue solution exceeds 2(n4 - 1)");
        for (EdgeId cur_id : exact) result.edges.push_back(detail::smallest_original(prov[cur_id]));
    } else {
        for (EdgeId cur_id = 0; cur_id < cur.edge_count(); ++cur_id)
            result.edges.push_back(detail::smallest_original(prov[cur_id]));
    }
    std::sort(result.edges.begin(), result.edges.end());
    result.edges.erase(std::unique(result.edges.begin(), result.edges.end()),
                       result.edges.end());

    result.trace.final_graph = std::move(cur);
    result.trace.final_provenance = std::move(prov);
    result.trace.vertex_map = std::move(vmap);
    return result;
}

// Unique minimum equivalent graph of a DAG: keep an edge iff no alternate
// path connects its endpoints.
inline std::vector<EdgeId> dag_transitive_reduction(const DirectedGraph& dag) {
    if (find_cycle_with_length_at_least(dag, 2))
        throw graph_error(graph_error::kind::bad_argument,
                          "transitive reduction requires an acyclic graph");
    std::vector<EdgeId> kept;
    for (EdgeId e = 0; e < dag.edge_count(); ++e) {
        VertexId u = dag.edge(e).tail, v = dag.edge(e).head;
        std::vector<bool> seen(dag.vertex_count(), false);
        std::vector<VertexId> stack{u};
        seen[u] = true;
        bool alternate = false;
        while (!stack.empty() && !alternate) {
            VertexId x = stack.back();
            stack.pop_back();
            for (auto [y, id] : dag.out(x)) {
                if (id == e || seen[y]) continue;
                if (y == v) {
                    alternate = true;
                    break;
                }
                seen[y] = true;
                stack.push_back(y);
            }
        }
        if (!alternate) kept.push_back(e);
    }
    return kept;
}

// Full minimum-equivalent-graph pipeline: approximate SCSS inside each
// strongly connected component, transitive reduction across them.
inline std::vector<EdgeId> meg(const DirectedGraph& g, int k) {
    std::vector<EdgeId> answer;
    for (const auto& comp : strongly_connected_components(g)) {
        if (comp.size() < 2) continue;
        Subgraph sub = induced_subgraph(g, comp);
        ApproxResult local = scss_approx(sub.graph, k);
        for (EdgeId id : local.edges) answer.push_back(sub.edge_ids[id]);
    }
    Condensation cond = condensation(g);
    for (EdgeId dag_edge : dag_transitive_reduction(cond.dag))
        answer.push_back(cond.representative_edge[dag_edge]);
    std::sort(answer.begin(), answer.end());
    return answer;
}

}  // namespace meg
