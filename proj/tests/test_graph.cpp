#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "homcert/graph.hpp"

using namespace homcert;

TEST_CASE("cycle_graph builds C_m") {
    const Graph c3 = cycle_graph(3);
    CHECK(c3.vertex_count() == 3);
    CHECK(c3.name() == "cycle:3");
    CHECK(c3.adjacent(0, 1));
    CHECK(c3.adjacent(1, 2));
    CHECK(c3.adjacent(2, 0));
    CHECK(c3.is_complete());  // the triangle happens to be K3

    const Graph c5 = cycle_graph(5);
    CHECK(c5.edges().size() == 5);
    CHECK(c5.adjacent(4, 0));
    CHECK_FALSE(c5.adjacent(0, 2));
    CHECK_FALSE(c5.is_complete());

    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
}

TEST_CASE("complete_graph builds K_n") {
    const Graph k1 = complete_graph(1);
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edges().empty());
    CHECK(k1.is_complete());

    const Graph k2 = complete_graph(2);
    CHECK(k2.edges().size() == 1);

    const Graph k3 = complete_graph(3);
    CHECK(k3.edges().size() == 3);
    CHECK(k3.is_complete());

    CHECK_THROWS_AS(complete_graph(0), std::invalid_argument);
}

TEST_CASE("edge_graph is K_2 named edge") {
    const Graph e = edge_graph();
    CHECK(e.vertex_count() == 2);
    CHECK(e.name() == "edge");
    CHECK(e.adjacent(0, 1));
    CHECK(e.is_complete());
}

TEST_CASE("graph constructor validation") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);   // self-loop
    CHECK_THROWS_AS(Graph(3, {{0, 5}}), std::invalid_argument);   // out of range
    CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65, {}), std::invalid_argument);
    const Graph g(3, {{0, 1}, {1, 0}});  // duplicate edge collapses
    CHECK(g.edges().size() == 1);
    CHECK(Graph(64, {}).vertex_count() == 64);
}

TEST_CASE("neighbor masks") {
    const Graph c5 = cycle_graph(5);
    CHECK(c5.neighbors(0) == ((1u << 1) | (1u << 4)));
    CHECK(c5.neighbors(2) == ((1u << 1) | (1u << 3)));
}

TEST_CASE("read_edge_list") {
    std::istringstream in("# path on three vertices\n3\n0 1\n\n1 2\n");
    const Graph g = read_edge_list(in, "file:test");
    CHECK(g.vertex_count() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.name() == "file:test");

    std::istringstream bad("3\n0 x\n");
    CHECK_THROWS_AS(read_edge_list(bad, ""), std::invalid_argument);
    std::istringstream empty("");
    CHECK_THROWS_AS(read_edge_list(empty, ""), std::invalid_argument);
}

TEST_CASE("cycle negation fixes 0 and swaps the antipodal edge") {
    const Involution g5 = cycle_negation(5);  // r = 2
    CHECK(g5.apply(0) == 0);
    CHECK(g5.apply(1) == 4);
    CHECK(g5.apply(2) == 3);
    CHECK(g5.apply(3) == 2);
    CHECK(g5.apply(4) == 1);

    const Involution g3 = cycle_negation(3);  // r = 1
    CHECK(g3.apply(0) == 0);
    CHECK(g3.apply(1) == 2);
    CHECK(g3.apply(2) == 1);

    for (int m = 3; m <= 15; ++m) {
        const Involution g = cycle_negation(m);
        int fixed = 0;
        for (int v = 0; v < m; ++v) {
            CHECK(g.apply(g.apply(v)) == v);
            fixed += g.apply(v) == v;
        }
        // odd cycles fix only 0; even cycles also fix the opposite vertex
        CHECK(fixed == (m % 2 == 1 ? 1 : 2));
    }
}

TEST_CASE("edge swap") {
    const Involution s = edge_swap();
    CHECK(s.apply(0) == 1);
    CHECK(s.apply(1) == 0);
}

TEST_CASE("involution validation") {
    const Graph p3(3, {{0, 1}, {1, 2}});  // path 0-1-2
    CHECK_NOTHROW(Involution(p3, {2, 1, 0}));  // reversal is an automorphism
    // order 2 but moves the middle of the path onto an end: not an automorphism
    CHECK_THROWS_AS(Involution(p3, {1, 0, 2}), std::invalid_argument);
    // a 3-cycle is not order 2
    CHECK_THROWS_AS(Involution(cycle_graph(3), {1, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Involution(p3, {0, 1}), std::invalid_argument);   // size
    CHECK_THROWS_AS(Involution(p3, {0, 1, 5}), std::invalid_argument);  // range
}
