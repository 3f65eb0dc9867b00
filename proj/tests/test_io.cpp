#include <catch2/catch_amalgamated.hpp>

#include "meg/io.hpp"
#include "meg/oracle.hpp"
#include "test_util.hpp"

using namespace meg;
using namespace testutil;

TEST_CASE("parse_graph on well-formed input") {
    DirectedGraph g = parse_graph("3 3\n0 1\n1 2\n2 0\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.edge(0).tail == 0);
    CHECK(g.edge(2).head == 0);

    DirectedGraph c = parse_graph("# a comment\n3 3\n\n0 1\n1 2\n# another\n2 0");
    CHECK(c.edge_count() == 3);

    DirectedGraph empty = parse_graph("0 0\n");
    CHECK(empty.vertex_count() == 0);

    DirectedGraph padded = parse_graph("  2   2 \n 0 1\n1 0\t\n");
    CHECK(padded.edge_count() == 2);
}

TEST_CASE("parse_graph reports precise error positions") {
    try {
        parse_graph("# c\n2 1\n0 0\n");
        FAIL("expected self-loop error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
    }
    try {
        parse_graph("3 2\n0 1\n");
        FAIL("expected edge count error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
    }
    try {
        parse_graph("2 2\n0 1\n0 1\n");
        FAIL("expected duplicate edge error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }
    try {
        parse_graph("2 1\n0 7\n");
        FAIL("expected range error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_graph(""), parse_error);
    CHECK_THROWS_AS(parse_graph("# only comments\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("2\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("2 1\n0 x\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("2 1\n0 1\n1 0\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("-1 0\n"), parse_error);
}

TEST_CASE("serialize_graph and serialize_edge_set are byte-stable") {
    DirectedGraph g = c3();
    CHECK(serialize_graph(g) == "3 3\n0 1\n1 2\n2 0\n");
    CHECK(serialize_edge_set(g, {2, 0, 1}) == "3\n0 1\n1 2\n2 0\n");
    CHECK(serialize_edge_set(g, {}) == "0\n");
    CHECK_THROWS_AS(serialize_edge_set(g, {5}), graph_error);
}

TEST_CASE("parse and serialize round-trip on generated graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        DirectedGraph g = gen_triangle_composite(4 + static_cast<int>(seed % 8), seed);
        DirectedGraph h = parse_graph(serialize_graph(g));
        REQUIRE(h.vertex_count() == g.vertex_count());
        REQUIRE(h.edge_count() == g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            CHECK(h.edge(e).tail == g.edge(e).tail);
            CHECK(h.edge(e).head == g.edge(e).head);
        }
    }
}
