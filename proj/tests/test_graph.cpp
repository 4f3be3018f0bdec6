#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "pairdom/graph.hpp"

using namespace pairdom;

TEST_SUITE("graph") {
    TEST_CASE("parses the smallest legal input") {
        Graph g = parse_graph("2 1\n0 1");
        CHECK(g.n == 2);
        CHECK(g.m == 1);
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(1, 0));
    }

    TEST_CASE("parses a triangle") {
        Graph g = parse_graph("3 3\n0 1\n1 2\n0 2\n");
        CHECK(g.n == 3);
        CHECK(g.m == 3);
        CHECK(g.is_complete());
    }

    TEST_CASE("accepts comments and blank lines") {
        Graph g = parse_graph("# a path\n\n3 2\n0 1\n# middle\n1 2\n");
        CHECK(g.n == 3);
        CHECK(g.m == 2);
    }

    TEST_CASE("rejects self-loops") {
        CHECK_THROWS_AS(parse_graph("2 1\n0 0"), ParseError);
    }

    TEST_CASE("rejects duplicate edges") {
        CHECK_THROWS_AS(parse_graph("3 2\n0 1\n1 0"), ParseError);
        CHECK_THROWS_AS(parse_graph("3 2\n0 1\n0 1"), ParseError);
    }

    TEST_CASE("rejects out-of-range ids") {
        CHECK_THROWS_AS(parse_graph("2 1\n0 2"), ParseError);
        CHECK_THROWS_AS(parse_graph("2 1\n-1 0"), ParseError);
    }

    TEST_CASE("rejects malformed documents") {
        CHECK_THROWS_AS(parse_graph(""), ParseError);
        CHECK_THROWS_AS(parse_graph("2"), ParseError);
        CHECK_THROWS_AS(parse_graph("2 1\n0"), ParseError);
        CHECK_THROWS_AS(parse_graph("2 1\n0 1 9"), ParseError);
        CHECK_THROWS_AS(parse_graph("2 2\n0 1"), ParseError);
        CHECK_THROWS_AS(parse_graph("2 0\n0 1"), ParseError);
        CHECK_THROWS_AS(parse_graph("0 0\n"), ParseError);
        CHECK_THROWS_AS(parse_graph("2 1\nx y"), ParseError);
    }

    TEST_CASE("adjacency is sorted and symmetric") {
        Graph g = parse_graph("4 4\n3 0\n2 0\n1 0\n3 1\n");
        CHECK(g.adj[0] == std::vector<Vertex>{1, 2, 3});
        for (Vertex u = 0; u < g.n; ++u)
            for (Vertex v : g.adj[u]) CHECK(g.has_edge(v, u));
    }

    TEST_CASE("round-trips through format_edge_list") {
        Graph g = fixtures::triangle_path_triangle();
        Graph h = parse_graph(format_edge_list(g));
        CHECK(h.n == g.n);
        CHECK(h.m == g.m);
        for (Vertex v = 0; v < g.n; ++v) CHECK(h.adj[v] == g.adj[v]);
    }
}
