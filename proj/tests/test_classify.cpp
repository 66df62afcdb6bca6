#include <catch2/catch_amalgamated.hpp>

#include "satlab/audit.hpp"
#include "satlab/classify.hpp"
#include "satlab/family.hpp"

using namespace satlab;

namespace {

Graph path(std::initializer_list<std::pair<int, int>> edges, int n) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("type-I classification: pendant blocks around a cut vertex") {
    // base K_2 with two K_3 blocks joined to vertex 0
    Graph g = build_family_member({complete_graph(2), 4, {2, 0}, {0, 0}});
    REQUIRE(g.order() == 8);
    REQUIRE(g.edge_count() == 13);
    auto copies = classify_kt_copies(g, 4);
    REQUIRE(copies.size() == 2);
    for (const auto& c : copies) {
        REQUIRE(c.kind == KtKind::TYPE_I);
        REQUIRE(c.lucky_vertex == 0);
    }
    auto core = derive_core(g, 4);
    REQUIRE(core.type1_count == 2);
    REQUIRE(core.type2_count == 0);
    REQUIRE(core.removed_vertices == 6);
    REQUIRE(core.removed_sets_disjoint);
    REQUIRE(core.core == complete_graph(2));
    REQUIRE(g.edge_count() == core.core.edge_count() + 6 * core.type1_count + 8 * core.type2_count);
}

TEST_CASE("type-II classification: block attached through t-2 vertices") {
    // base K_2 with one K_4 block whose first two vertices see vertex 0
    Graph g = build_family_member({complete_graph(2), 4, {0, 0}, {1, 0}});
    REQUIRE(g.order() == 6);
    REQUIRE(g.edge_count() == 9);
    auto copies = classify_kt_copies(g, 4);
    REQUIRE(copies.size() == 1);
    REQUIRE(copies[0].kind == KtKind::TYPE_II);
    REQUIRE(copies[0].apex == 0);
    REQUIRE(copies[0].clique == std::vector<int>{2, 3, 4, 5});
    auto core = derive_core(g, 4);
    REQUIRE(core.type1_count == 0);
    REQUIRE(core.type2_count == 1);
    REQUIRE(core.removed_vertices == 4);
    REQUIRE(core.core == complete_graph(2));
    REQUIRE(g.edge_count() == core.core.edge_count() + 6 * core.type1_count + 8 * core.type2_count);
}

TEST_CASE("clique-free graphs have an empty classification and a full core") {
    Graph g = ehm_graph(8, 4);
    REQUIRE(classify_kt_copies(g, 4).empty());
    auto core = derive_core(g, 4);
    REQUIRE(core.removed_vertices == 0);
    REQUIRE(core.core == g);
    REQUIRE_THROWS_AS(classify_kt_copies(g, 3), precondition_error);
}

TEST_CASE("cliques inside larger cliques fit neither type") {
    auto copies = classify_kt_copies(complete_graph(6), 4);
    REQUIRE(copies.size() == 15);
    for (const auto& c : copies) REQUIRE(c.kind == KtKind::NONE);
}

TEST_CASE("p4 detection") {
    REQUIRE(has_p4_subgraph(path({{0, 1}, {1, 2}, {2, 3}}, 4)));
    REQUIRE_FALSE(has_p4_subgraph(complete_graph(3)));
    REQUIRE_FALSE(has_p4_subgraph(join(complete_graph(1), empty_graph(3)))); // star
    REQUIRE(has_p4_subgraph(path({{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 4)));     // C_4
    // paw: triangle with a pendant
    REQUIRE(has_p4_subgraph(path({{0, 1}, {1, 2}, {2, 0}, {2, 3}}, 4)));
    REQUIRE_FALSE(has_p4_subgraph(copies(2, complete_graph(3))));
    REQUIRE_FALSE(has_p4_subgraph(empty_graph(5)));
}

TEST_CASE("degree-2 vertex types") {
    // triangle with a pendant vertex on 2: vertex 0 sees a degree-2 partner
    // whose second neighbor is 0's other neighbor
    Graph t2 = path({{0, 1}, {1, 2}, {2, 0}, {2, 3}}, 4);
    REQUIRE(classify_degree2_vertex(t2, 0) == Degree2Type::TYPE_II);
    REQUIRE(classify_degree2_vertex(t2, 1) == Degree2Type::TYPE_II);
    REQUIRE_THROWS_AS(classify_degree2_vertex(t2, 2), precondition_error);

    // four-cycle with pendants on 2 and 3: the partner's second neighbor is
    // adjacent to the far neighbor
    Graph t1 = path({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 5}}, 6);
    REQUIRE(classify_degree2_vertex(t1, 0) == Degree2Type::TYPE_I);
    REQUIRE(classify_degree2_vertex(t1, 1) == Degree2Type::TYPE_I);

    // both neighbors substantial and non-adjacent
    Graph t3 = path({{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}}, 7);
    REQUIRE(classify_degree2_vertex(t3, 0) == Degree2Type::TYPE_III);

    // both neighbors substantial, adjacent, with distinct outside neighbors
    Graph t4 = path({{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}}, 5);
    REQUIRE(classify_degree2_vertex(t4, 0) == Degree2Type::TYPE_IV);

    // shared single outside neighbor defeats type IV
    Graph shared = path({{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}, 4);
    REQUIRE_FALSE(classify_degree2_vertex(shared, 0).has_value());

    // both neighbors of degree 2 fit no type
    REQUIRE_FALSE(classify_degree2_vertex(complete_graph(3), 0).has_value());

    // degree-2 partner whose second neighbor misses the far neighbor
    Graph miss = path({{0, 1}, {0, 3}, {1, 2}, {3, 4}, {3, 5}}, 6);
    REQUIRE_FALSE(classify_degree2_vertex(miss, 0).has_value());
}

TEST_CASE("structural audit of a connected graph against the leaf-triangle pattern") {
    Graph wheel = join(complete_graph(1), copies(3, complete_graph(2)));
    auto a = structural_audit(wheel, AuditContext::K33_CONNECTED);
    REQUIRE(a.pass);
    REQUIRE(a.diameter_in_2_4 == true);
    REQUIRE(a.p4_free_neighborhoods == true);
    REQUIRE(a.degree2_types_total == true);
    REQUIRE(a.witnesses.empty());

    REQUIRE_THROWS_AS(structural_audit(copies(2, complete_graph(3)), AuditContext::K33_CONNECTED),
                      precondition_error);
    REQUIRE_THROWS_AS(structural_audit(complete_graph(5), AuditContext::K33_CONNECTED),
                      precondition_error);
}

TEST_CASE("structural audit of K_t copies in a connected graph") {
    Graph g = build_family_member({complete_graph(2), 4, {2, 0}, {0, 0}});
    auto a = structural_audit(g, AuditContext::K2T_CONNECTED, 4);
    REQUIRE(a.pass);
    REQUIRE(a.kt_classification_total == true);

    auto bad = structural_audit(complete_graph(6), AuditContext::K2T_CONNECTED, 4);
    REQUIRE_FALSE(bad.pass);
    REQUIRE(bad.kt_classification_total == false);
    REQUIRE_FALSE(bad.witnesses.empty());

    REQUIRE_THROWS_AS(structural_audit(g, AuditContext::K2T_CONNECTED, 3), precondition_error);
}

TEST_CASE("structural audit of disconnected decompositions") {
    // saturated residual plus one padding clique
    Graph wheel = join(complete_graph(1), copies(3, complete_graph(2)));
    Graph ok = disjoint_union(wheel, complete_graph(5));
    auto a = structural_audit(ok, AuditContext::K33_DISCONNECTED);
    REQUIRE(a.pass);
    REQUIRE(a.disconnected_decomposition == true);

    // complete residual below the padding order
    Graph ok2 = disjoint_union(complete_graph(2), complete_graph(5));
    REQUIRE(structural_audit(ok2, AuditContext::K2T_DISCONNECTED, 4).pass);

    // two residuals is a violation
    Graph bad = disjoint_union(disjoint_union(complete_graph(2), complete_graph(2)),
                               complete_graph(5));
    auto b = structural_audit(bad, AuditContext::K2T_DISCONNECTED, 4);
    REQUIRE_FALSE(b.pass);
    REQUIRE(b.disconnected_decomposition == false);
    REQUIRE_FALSE(b.witnesses.empty());

    REQUIRE_THROWS_AS(structural_audit(wheel, AuditContext::K33_DISCONNECTED), precondition_error);
}
