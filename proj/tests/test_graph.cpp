#include <catch2/catch_amalgamated.hpp>

#include "meg/graph.hpp"
#include "meg/oracle.hpp"
#include "test_util.hpp"

using namespace meg;
using namespace testutil;

TEST_CASE("build_graph constructs C3 with positional edge ids") {
    DirectedGraph g = c3();
    REQUIRE(g.vertex_count() == 3);
    REQUIRE(g.edge_count() == 3);
    CHECK(g.edge(0).tail == 0);
    CHECK(g.edge(0).head == 1);
    CHECK(g.edge(2).tail == 2);
    CHECK(g.edge(2).head == 0);
}

TEST_CASE("build_graph rejects malformed inputs with distinct errors") {
    auto kind_of = [](auto fn) {
        try {
            fn();
        } catch (const graph_error& e) {
            return e.error_kind();
        }
        FAIL("expected graph_error");
        return graph_error::kind::bad_argument;
    };
    CHECK(kind_of([] { build_graph(2, {{0, 0}}); }) == graph_error::kind::self_loop);
    CHECK(kind_of([] { build_graph(3, {{0, 1}, {0, 1}}); }) == graph_error::kind::duplicate_edge);
    CHECK(kind_of([] { build_graph(2, {{0, 2}}); }) == graph_error::kind::out_of_range);
    CHECK(kind_of([] { build_graph(2, {{-1, 0}}); }) == graph_error::kind::out_of_range);
}

TEST_CASE("strongly connected components on fixtures") {
    CHECK(strongly_connected_components(c3()) ==
          std::vector<std::vector<VertexId>>{{0, 1, 2}});
    DirectedGraph chain = build_graph(2, {{0, 1}});
    CHECK(strongly_connected_components(chain) ==
          std::vector<std::vector<VertexId>>{{0}, {1}});
    CHECK(strongly_connected_components(k22g()) ==
          std::vector<std::vector<VertexId>>{{0, 1, 2, 3, 4}});
}

TEST_CASE("scc partition matches pairwise reachability on random graphs") {
    std::mt19937_64 rng(11);
    std::bernoulli_distribution keep(0.3);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && keep(rng)) pairs.push_back({u, v});
        DirectedGraph g = build_graph(n, pairs);
        std::vector<EdgeId> all(g.edge_count());
        for (EdgeId id = 0; id < g.edge_count(); ++id) all[id] = id;
        auto reach = brute_closure(g, all);
        auto comps = strongly_connected_components(g);
        std::vector<int> comp_of(n, -1);
        for (int c = 0; c < (int)comps.size(); ++c)
            for (VertexId v : comps[c]) comp_of[v] = c;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                CHECK((comp_of[u] == comp_of[v]) == (reach[u][v] && reach[v][u]));
        // Topological order of the condensation: edges never point backwards.
        for (const auto& e : g.edges()) CHECK(comp_of[e.tail] <= comp_of[e.head]);
    }
}

TEST_CASE("condensation of fixtures") {
    Condensation c = condensation(c3());
    CHECK(c.dag.vertex_count() == 1);
    CHECK(c.dag.edge_count() == 0);

    DirectedGraph g = build_graph(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 2}});
    Condensation d = condensation(g);
    REQUIRE(d.dag.vertex_count() == 2);
    REQUIRE(d.dag.edge_count() == 1);
    CHECK(d.representative_edge[0] == 2);  // the (1, 2) bridge
}

TEST_CASE("condensation is acyclic and closure-consistent on random graphs") {
    std::mt19937_64 rng(12);
    std::bernoulli_distribution keep(0.35);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && keep(rng)) pairs.push_back({u, v});
        DirectedGraph g = build_graph(n, pairs);
        Condensation c = condensation(g);
        CHECK(brute_max_cycle_length(c.dag) == 0);
        // One dag edge per ordered component pair joined by an original edge.
        std::set<std::pair<int, int>> expected;
        for (const auto& e : g.edges())
            if (c.component_of[e.tail] != c.component_of[e.head])
                expected.insert({c.component_of[e.tail], c.component_of[e.head]});
        std::set<std::pair<int, int>> actual;
        for (const auto& e : c.dag.edges()) actual.insert({e.tail, e.head});
        CHECK(actual == expected);
        for (EdgeId d = 0; d < c.dag.edge_count(); ++d) {
            EdgeId rep = c.representative_edge[d];
            CHECK(c.component_of[g.edge(rep).tail] == c.dag.edge(d).tail);
            CHECK(c.component_of[g.edge(rep).head] == c.dag.edge(d).head);
        }
    }
}

TEST_CASE("block decomposition of fixtures") {
    BlockDecomposition tt_blocks = block_decomposition(tt());
    REQUIRE(tt_blocks.blocks.size() == 1);
    CHECK(tt_blocks.blocks[0] == std::vector<EdgeId>{0, 1, 2, 3, 4});
    CHECK(tt_blocks.cut_vertices.empty());

    // Two triangles sharing only vertex 0.
    DirectedGraph two = build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    BlockDecomposition b = block_decomposition(two);
    REQUIRE(b.blocks.size() == 2);
    CHECK(b.cut_vertices == std::set<VertexId>{0});

    // An antiparallel pair is a single block.
    DirectedGraph pair = build_graph(2, {{0, 1}, {1, 0}});
    BlockDecomposition p = block_decomposition(pair);
    REQUIRE(p.blocks.size() == 1);
    CHECK(p.blocks[0] == std::vector<EdgeId>{0, 1});
    CHECK(p.cut_vertices.empty());
}

TEST_CASE("cut vertices agree with the deletion oracle") {
    std::mt19937_64 rng(13);
    std::bernoulli_distribution keep(0.3);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && keep(rng)) pairs.push_back({u, v});
        DirectedGraph g = build_graph(n, pairs);
        BlockDecomposition b = block_decomposition(g);
        CHECK(b.cut_vertices == brute_cut_vertices(g));
        // Blocks partition the edge set.
        std::vector<EdgeId> all_block_edges;
        for (const auto& blk : b.blocks)
            all_block_edges.insert(all_block_edges.end(), blk.begin(), blk.end());
        std::sort(all_block_edges.begin(), all_block_edges.end());
        std::vector<EdgeId> expect(g.edge_count());
        for (EdgeId id = 0; id < g.edge_count(); ++id) expect[id] = id;
        CHECK(all_block_edges == expect);
    }
}

TEST_CASE("two edges share a block iff they share a simple undirected cycle") {
    std::mt19937_64 rng(14);
    std::bernoulli_distribution keep(0.35);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && keep(rng)) pairs.push_back({u, v});
        DirectedGraph g = build_graph(n, pairs);
        BlockDecomposition b = block_decomposition(g);
        std::vector<int> block_of(g.edge_count(), -1);
        for (int bi = 0; bi < (int)b.blocks.size(); ++bi)
            for (EdgeId id : b.blocks[bi]) block_of[id] = bi;

        // Undirected simple cycles via brute force over edge subsets: a cycle
        // is a connected subset where every touched vertex has degree two.
        const int m = g.edge_count();
        if (m > 12) continue;
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            std::vector<int> deg(n, 0);
            std::vector<EdgeId> ids;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1) {
                    ids.push_back(i);
                    ++deg[g.edge(i).tail];
                    ++deg[g.edge(i).head];
                }
            if (ids.size() < 2) continue;
            bool cycle = true;
            for (int v = 0; v < n; ++v)
                if (deg[v] != 0 && deg[v] != 2) cycle = false;
            if (!cycle) continue;
            // connectivity of the chosen edges
            std::vector<std::vector<int>> adj(n);
            for (EdgeId id : ids) {
                adj[g.edge(id).tail].push_back(g.edge(id).head);
                adj[g.edge(id).head].push_back(g.edge(id).tail);
            }
            int start = g.edge(ids[0]).tail;
            std::vector<bool> seen(n, false);
            std::vector<int> stack{start};
            seen[start] = true;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : adj[v])
                    if (!seen[w]) {
                        seen[w] = true;
                        stack.push_back(w);
                    }
            }
            for (int v = 0; v < n; ++v)
                if (deg[v] > 0 && !seen[v]) cycle = false;
            if (!cycle) continue;
            for (EdgeId id : ids) CHECK(block_of[id] == block_of[ids[0]]);
        }
    }
}

TEST_CASE("contract_vertices on fixtures") {
    ContractionResult r = contract_vertices(c3(), {{0, 1, 2}});
    CHECK(r.graph.vertex_count() == 1);
    CHECK(r.graph.edge_count() == 0);

    // Identity partition leaves the graph unchanged with singleton provenance.
    ContractionResult id = contract_vertices(tt(), {{0}, {1}, {2}, {3}});
    CHECK(id.graph.edge_count() == tt().edge_count());
    for (EdgeId e = 0; e < id.graph.edge_count(); ++e)
        CHECK(id.edge_provenance[e] == std::vector<EdgeId>{e});

    // Merging 1 and 2 in K22G merges the root's two out-edges.
    ContractionResult m = contract_vertices(k22g(), {{0}, {1, 2}, {3}, {4}});
    bool found_merge = false;
    for (EdgeId e = 0; e < m.graph.edge_count(); ++e)
        if (m.edge_provenance[e] == std::vector<EdgeId>{0, 1}) found_merge = true;
    CHECK(found_merge);
}

TEST_CASE("contract_vertices rejects malformed partitions") {
    CHECK_THROWS_AS(contract_vertices(c3(), {{0, 1}}), graph_error);
    CHECK_THROWS_AS(contract_vertices(c3(), {{0, 1}, {1, 2}}), graph_error);
    CHECK_THROWS_AS(contract_vertices(c3(), {{0, 1, 2, 3}}), graph_error);
}

TEST_CASE("contraction provenance accounts for every original edge") {
    std::mt19937_64 rng(15);
    std::bernoulli_distribution keep(0.4);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && keep(rng)) pairs.push_back({u, v});
        DirectedGraph g = build_graph(n, pairs);
        // random partition
        int groups_count = 1 + static_cast<int>(rng() % n);
        std::vector<std::vector<VertexId>> groups(groups_count);
        for (int v = 0; v < n; ++v) groups[rng() % groups_count].push_back(v);
        groups.erase(std::remove_if(groups.begin(), groups.end(),
                                    [](const auto& gr) { return gr.empty(); }),
                     groups.end());
        ContractionResult r = contract_vertices(g, groups);
        int accounted = 0;
        for (const auto& prov : r.edge_provenance) accounted += (int)prov.size();
        int dropped = 0;
        for (const auto& e : g.edges())
            if (r.vertex_map[e.tail] == r.vertex_map[e.head]) ++dropped;
        CHECK(accounted + dropped == g.edge_count());
        for (const auto& e : r.graph.edges()) CHECK(e.tail != e.head);
    }
}

TEST_CASE("find_cycle_with_length_at_least on fixtures") {
    CHECK_FALSE(find_cycle_with_length_at_least(c3(), 4).has_value());
    auto three = find_cycle_with_length_at_least(c3(), 3);
    REQUIRE(three.has_value());
    CHECK(three->vertices == std::vector<VertexId>{0, 1, 2});

    auto four = find_cycle_with_length_at_least(complete_digraph(4), 4);
    REQUIRE(four.has_value());
    CHECK(four->length() >= 4);
    // Validate the witness: distinct vertices, consecutive edges.
    std::set<VertexId> distinct(four->vertices.begin(), four->vertices.end());
    CHECK(distinct.size() == four->vertices.size());
    const DirectedGraph g = complete_digraph(4);
    for (int i = 0; i < four->length(); ++i) {
        const Edge& e = g.edge(four->edge_ids[i]);
        CHECK(e.tail == four->vertices[i]);
        CHECK(e.head == four->vertices[(i + 1) % four->length()]);
    }
    CHECK_THROWS_AS(find_cycle_with_length_at_least(c3(), 1), graph_error);
}

TEST_CASE("cycle search absence agrees with brute-force enumeration") {
    std::mt19937_64 rng(16);
    std::bernoulli_distribution keep(0.3);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && keep(rng)) pairs.push_back({u, v});
        DirectedGraph g = build_graph(n, pairs);
        int longest = brute_max_cycle_length(g);
        for (int t = 2; t <= n + 1; ++t) {
            auto found = find_cycle_with_length_at_least(g, t);
            CHECK(found.has_value() == (longest >= t));
            if (found) {
                CHECK(found->length() >= t);
                std::set<VertexId> distinct(found->vertices.begin(), found->vertices.end());
                CHECK(distinct.size() == found->vertices.size());
                for (int i = 0; i < found->length(); ++i) {
                    const Edge& e = g.edge(found->edge_ids[i]);
                    CHECK(e.tail == found->vertices[i]);
                    CHECK(e.head == found->vertices[(i + 1) % found->length()]);
                }
            }
        }
    }
}

TEST_CASE("max_cycle_length_at_most on fixtures") {
    CHECK(max_cycle_length_at_most(c3(), 3));
    CHECK(max_cycle_length_at_most(k22g(), 3));
    CHECK_FALSE(max_cycle_length_at_most(complete_digraph(4), 3));
}

TEST_CASE("is_strongly_connected_on") {
    DirectedGraph g = c3();
    CHECK(is_strongly_connected_on(g, {0, 1, 2}));
    CHECK_FALSE(is_strongly_connected_on(g, {0, 1}));
    CHECK_FALSE(is_strongly_connected_on(g, {1, 2}));
    CHECK_THROWS_AS(is_strongly_connected_on(g, {7}), graph_error);

    DirectedGraph k = k22g();
    // {(0,1),(0,2),(3,0),(4,0),(1,3),(2,4)}
    CHECK(is_strongly_connected_on(k, {0, 1, 2, 3, 4, 7}));
}

TEST_CASE("subgraph extraction preserves edges and mappings") {
    DirectedGraph g = k22g();
    Subgraph s = subgraph_from_edges(g, {0, 2, 4});  // (0,1),(3,0),(1,3)
    CHECK(s.vertices == std::vector<VertexId>{0, 1, 3});
    CHECK(s.graph.vertex_count() == 3);
    CHECK(s.graph.edge_count() == 3);
    for (int i = 0; i < 3; ++i) {
        const Edge& local = s.graph.edge(i);
        const Edge& orig = g.edge(s.edge_ids[i]);
        CHECK(s.vertices[local.tail] == orig.tail);
        CHECK(s.vertices[local.head] == orig.head);
    }

    Subgraph ind = induced_subgraph(g, {0, 1, 3});
    CHECK(ind.edge_ids == std::vector<EdgeId>{0, 2, 4});
}
