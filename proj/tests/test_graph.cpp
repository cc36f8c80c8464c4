#include "helpers.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace pzf;
using pzf::testing::fig1_tree;

TEST_CASE("edge list parsing") {
    SECTION("triangle") {
        Graph g = Graph::from_edge_list("v1 v2\nv2 v3\nv3 v1");
        CHECK(g.order() == 3);
        CHECK(g.edge_count() == 3);
        CHECK(g.degree(0) == 2);
    }
    SECTION("figure tree structure") {
        Graph g = fig1_tree();
        CHECK(g.order() == 6);
        CHECK(g.degree(*g.index_of("v0")) == 2);
        CHECK(g.degree(*g.index_of("v11")) == 3);
        CHECK(g.degree(*g.index_of("v21")) == 1);
        CHECK(g.degree(*g.index_of("v22")) == 1);
        CHECK(g.degree(*g.index_of("v23")) == 1);
    }
    SECTION("header line fixes n") {
        Graph g = Graph::from_edge_list("n 3\n0 1\n1 2");
        CHECK(g.order() == 3);
    }
    SECTION("errors") {
        CHECK_THROWS_AS(Graph::from_edge_list("a b\nc d"), parse_error);       // disconnected
        CHECK_THROWS_AS(Graph::from_edge_list("a a"), parse_error);            // self-loop
        CHECK_THROWS_AS(Graph::from_edge_list("a b\nb a"), parse_error);       // duplicate
        CHECK_THROWS_AS(Graph::from_edge_list(""), parse_error);               // n < 2
        CHECK_THROWS_AS(Graph::from_edge_list("a b c"), parse_error);          // bad tokens
    }
}

TEST_CASE("graph6 decoding") {
    // hand-decoded: 'B' = n=3, 'w' = 111000 -> all three upper-triangle bits
    Graph k3 = Graph::from_graph6("Bw");
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);

    // 'C' = n=4, '~' = 111111 -> complete graph K4
    Graph k4 = Graph::from_graph6("C~");
    CHECK(k4.order() == 4);
    CHECK(k4.edge_count() == 6);

    // 'g' = 101000 -> edges (0,1) and (1,2): path P3
    Graph p3 = Graph::from_graph6("Bg");
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.degree(1) == 2);

    CHECK_THROWS_AS(Graph::from_graph6("B"), parse_error);    // length mismatch
    CHECK_THROWS_AS(Graph::from_graph6("Bww"), parse_error);  // length mismatch
    CHECK_THROWS_AS(Graph::from_graph6(""), parse_error);
    CHECK_THROWS_AS(Graph::from_graph6("B_"), parse_error);   // disconnected: lone edge (0,1)
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 11);
        Graph g = pzf::testing::random_connected_graph(rng, n);
        Graph back = Graph::from_graph6(g.to_graph6());
        REQUIRE(back.order() == g.order());
        for (int v = 0; v < n; ++v) REQUIRE(back.neighbors(v) == g.neighbors(v));
    }
}

TEST_CASE("builders") {
    Graph star = Graph::star(3);
    CHECK(star.order() == 4);
    CHECK(star.degree(0) == 3);  // center is index 0
    CHECK(star.degree(1) == 1);

    Graph c3 = Graph::cycle(3);
    CHECK(c3.edge_count() == 3);

    Graph p2 = Graph::path(2);
    CHECK(p2.edge_count() == 1);

    CHECK_THROWS_AS(Graph::path(1), parse_error);
    CHECK_THROWS_AS(Graph::cycle(2), parse_error);
    CHECK_THROWS_AS(Graph::star(0), parse_error);
}

TEST_CASE("neighborhood and degree invariants") {
    Graph k3 = Graph::cycle(3);
    CHECK(k3.closed_neighborhood(0) == VertexSet::full(3));

    Graph p3 = Graph::path(3);
    CHECK(p3.closed_neighborhood(0) == pzf::testing::make_set_idx(3, {0, 1}));

    Graph tree = fig1_tree();
    int v11 = *tree.index_of("v11");
    CHECK(tree.closed_neighborhood(v11) ==
          pzf::testing::make_set(tree, {"v11", "v0", "v21", "v22"}));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = pzf::testing::random_connected_graph(rng, 2 + static_cast<int>(rng() % 8));
        std::size_t degree_sum = 0;
        for (int v = 0; v < g.order(); ++v) {
            CHECK(g.closed_neighborhood(v).count() == static_cast<std::size_t>(g.degree(v)) + 1);
            degree_sum += g.degree(v);
        }
        CHECK(degree_sum == 2 * g.edge_count());
    }

    CHECK_THROWS_AS(k3.degree(5), std::out_of_range);
    CHECK_THROWS_AS(k3.closed_neighborhood(-1), std::out_of_range);
}

TEST_CASE("dot emission marks black vertices") {
    Graph p2 = Graph::path(2);
    VertexSet black = pzf::testing::make_set_idx(2, {0});
    std::string dot = p2.to_dot(&black);
    CHECK(dot.find("fillcolor=black") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
}
