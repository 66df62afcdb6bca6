#include <catch2/catch_amalgamated.hpp>

#include "satlab/graph.hpp"
#include "satlab/metrics.hpp"

using namespace satlab;

TEST_CASE("graph construction and edge operations") {
    Graph g(5);
    REQUIRE(g.order() == 5);
    REQUIRE(g.edge_count() == 0);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    REQUIRE(g.has_edge(0, 3));
    REQUIRE(g.has_edge(3, 0));
    REQUIRE_FALSE(g.has_edge(0, 4));
    REQUIRE(g.edge_count() == 2);
    REQUIRE(g.degree(3) == 2);
    REQUIRE(g.degree(1) == 0);
    g.remove_edge(0, 3);
    REQUIRE_FALSE(g.has_edge(0, 3));
    REQUIRE(g.edge_count() == 1);
}

TEST_CASE("graph rejects bad orders, loops, and bad vertices") {
    REQUIRE_THROWS_AS(Graph(-1), capacity_error);
    REQUIRE_THROWS_AS(Graph(kMaxOrder + 1), capacity_error);
    REQUIRE_NOTHROW(Graph(kMaxOrder));
    Graph g(3);
    REQUIRE_THROWS_AS(g.add_edge(1, 1), precondition_error);
    REQUIRE_THROWS_AS(g.add_edge(0, 3), precondition_error);
    REQUIRE_THROWS_AS(g.has_edge(-1, 0), precondition_error);
    REQUIRE_THROWS_AS(g.degree(5), precondition_error);
}

TEST_CASE("edges and non_edges partition the vertex pairs") {
    Graph g = complete_graph(4);
    g.remove_edge(1, 2);
    auto es = g.edges();
    auto nes = g.non_edges();
    REQUIRE(es.size() == 5);
    REQUIRE(nes.size() == 1);
    REQUIRE(nes[0] == std::pair<int, int>{1, 2});
    // lexicographic order
    REQUIRE(std::is_sorted(es.begin(), es.end()));
}

TEST_CASE("complete graph and algebra sizes") {
    REQUIRE(complete_graph(5).edge_count() == 10);
    REQUIRE(empty_graph(7).edge_count() == 0);
    Graph u = disjoint_union(complete_graph(3), complete_graph(4));
    REQUIRE(u.order() == 7);
    REQUIRE(u.edge_count() == 3 + 6);
    REQUIRE_FALSE(u.has_edge(0, 3));
    REQUIRE(u.has_edge(3, 6));

    Graph j = join(complete_graph(2), empty_graph(3));
    REQUIRE(j.order() == 5);
    REQUIRE(j.edge_count() == 1 + 6); // K_2 edge plus complete bipartite 2x3
    REQUIRE(j.has_edge(0, 2));
    REQUIRE_FALSE(j.has_edge(2, 3));

    Graph c = copies(3, complete_graph(3));
    REQUIRE(c.order() == 9);
    REQUIRE(c.edge_count() == 9);
    REQUIRE(copies(0, complete_graph(5)).order() == 0);
}

TEST_CASE("induced subgraph keeps relative order and edges") {
    Graph g = complete_graph(5);
    g.remove_edge(0, 4);
    Graph sub = g.induced(0b10011); // vertices 0, 1, 4
    REQUIRE(sub.order() == 3);
    REQUIRE(sub.edge_count() == 2); // 0-1 and 1-4 survive, 0-4 was removed
    REQUIRE(sub.has_edge(0, 1));
    REQUIRE(sub.has_edge(1, 2));
    REQUIRE_FALSE(sub.has_edge(0, 2));
}

TEST_CASE("relabeled permutes adjacency") {
    Graph p(4); // path 0-1-2-3
    p.add_edge(0, 1);
    p.add_edge(1, 2);
    p.add_edge(2, 3);
    Graph r = p.relabeled({3, 2, 1, 0});
    REQUIRE(r.edge_count() == 3);
    REQUIRE(r.has_edge(3, 2));
    REQUIRE(r.has_edge(2, 1));
    REQUIRE(r.has_edge(1, 0));
    REQUIRE_THROWS_AS(p.relabeled({0, 1, 2}), precondition_error);
}

TEST_CASE("graph metrics report connectivity and diameter") {
    Graph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    auto m = graph_metrics(path);
    REQUIRE(m.connected);
    REQUIRE(m.component_count == 1);
    REQUIRE(m.diameter == 3);
    REQUIRE(m.min_degree == 1);
    REQUIRE(m.max_degree == 2);

    Graph two = disjoint_union(complete_graph(3), complete_graph(2));
    auto m2 = graph_metrics(two);
    REQUIRE_FALSE(m2.connected);
    REQUIRE(m2.component_count == 2);
    REQUIRE(m2.diameter == kInfinite);
    REQUIRE(component_masks(two).size() == 2);
    REQUIRE(is_connected(complete_graph(1)));
}

TEST_CASE("union beyond capacity throws") {
    REQUIRE_THROWS_AS(disjoint_union(complete_graph(40), complete_graph(30)), capacity_error);
}
