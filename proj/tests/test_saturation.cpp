#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "satlab/family.hpp"
#include "satlab/graph6.hpp"
#include "satlab/report.hpp"
#include "satlab/saturation.hpp"

using namespace satlab;

TEST_CASE("saturation verdicts on hand-checked graphs") {
    // C_5 is triangle-saturated but not extremal
    Graph c5(5);
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    auto v = check_saturation(c5, VirusPattern(0, 3));
    REQUIRE(v.is_saturated);
    REQUIRE(v.is_free);
    REQUIRE(v.total_nonedges == 5);
    REQUIRE(v.completing_nonedges == 5);

    // the star is the extremal triangle-saturated graph
    REQUIRE(check_saturation(join(complete_graph(1), empty_graph(4)), VirusPattern(0, 3)).is_saturated);

    // K_4 contains K_3, so it is not saturated
    auto k4 = check_saturation(complete_graph(4), VirusPattern(0, 3));
    REQUIRE_FALSE(k4.is_saturated);
    REQUIRE_FALSE(k4.is_free);

    // C_6 is triangle-free but a long chord adds no triangle
    Graph c6(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    auto v6 = check_saturation(c6, VirusPattern(0, 3));
    REQUIRE(v6.is_free);
    REQUIRE_FALSE(v6.is_saturated);
    REQUIRE(v6.completing_nonedges == 6);
    REQUIRE(v6.total_nonedges == 9);
}

TEST_CASE("graphs below the pattern order are never saturated") {
    VirusPattern p(2, 4);
    auto v = check_saturation(complete_graph(5), p);
    REQUIRE(v.below_order);
    REQUIRE(v.is_free);
    REQUIRE_FALSE(v.is_saturated);
    REQUIRE_FALSE(is_saturated_fast(complete_graph(5), p));
    // complete graphs at or above the pattern order contain the virus
    REQUIRE_FALSE(is_saturated_fast(complete_graph(6), p));
}

TEST_CASE("connected requirement filters disconnected graphs") {
    // K_2 u K_5 is K^2_4-saturated but disconnected
    Graph g = disjoint_union(complete_graph(2), complete_graph(5));
    REQUIRE(is_saturated_fast(g, VirusPattern(2, 4)));
    REQUIRE_FALSE(is_saturated_fast(g, VirusPattern(2, 4), true));
    REQUIRE_FALSE(check_saturation(g, VirusPattern(2, 4), true).is_saturated);
}

TEST_CASE("known extremal searches") {
    // sat(5, K_3) = 4 via the star
    auto r1 = saturation_search(5, VirusPattern(0, 3), SearchMode::ALL);
    REQUIRE(r1.graphs_scanned == 34);
    REQUIRE(r1.sat_value == 4);
    REQUIRE(r1.extremal.size() == 1);
    REQUIRE(decode_graph6(r1.extremal[0]) ==
            canonical_graph(join(complete_graph(1), empty_graph(4))));

    // sat(6, K^2_4) = 9 with three extremal graphs
    auto r2 = saturation_search(6, VirusPattern(2, 4), SearchMode::ALL);
    REQUIRE(r2.graphs_scanned == 156);
    REQUIRE(r2.sat_value == 9);
    REQUIRE(r2.extremal.size() == 3);

    // sat(7, K^3_3) = 9, uniquely the wheel of triangles K_1 v 3K_2
    auto r3 = saturation_search(7, VirusPattern(3, 3), SearchMode::ALL);
    REQUIRE(r3.sat_value == 9);
    REQUIRE(r3.extremal.size() == 1);
    REQUIRE(decode_graph6(r3.extremal[0]) ==
            canonical_graph(join(complete_graph(1), copies(3, complete_graph(2)))));

    // below the pattern order nothing is saturated
    auto r4 = saturation_search(5, VirusPattern(2, 4), SearchMode::ALL);
    REQUIRE_FALSE(r4.sat_value.has_value());
    REQUIRE(r4.saturated_count == 0);
    REQUIRE(r4.extremal.empty());
}

TEST_CASE("connected search differs from unrestricted search") {
    // at order 7 the K^2_4 minimum is realized by two connected graphs and
    // by the disconnected K_2 u K_5
    auto all = saturation_search(7, VirusPattern(2, 4), SearchMode::ALL);
    auto conn = saturation_search(7, VirusPattern(2, 4), SearchMode::CONNECTED);
    REQUIRE(all.graphs_scanned == 1044);
    REQUIRE(conn.graphs_scanned == 853);
    REQUIRE(all.sat_value == 11);
    REQUIRE(conn.sat_value == 11);
    REQUIRE(all.extremal.size() == 3);
    REQUIRE(conn.extremal.size() == 2);
    std::string k2k5 = canonical_graph6(disjoint_union(complete_graph(2), complete_graph(5)));
    REQUIRE(std::count(all.extremal.begin(), all.extremal.end(), k2k5) == 1);
    REQUIRE(std::count(conn.extremal.begin(), conn.extremal.end(), k2k5) == 0);
}

TEST_CASE("stream search and thread counts are deterministic") {
    std::vector<Graph> graphs;
    enumerate_graphs(6, false, [&](const Graph& g) { graphs.push_back(g); });
    auto direct = saturation_search(6, VirusPattern(2, 4), SearchMode::ALL, 1);
    auto streamed = saturation_search_stream(graphs, 6, VirusPattern(2, 4), SearchMode::ALL, 1);
    auto threaded = saturation_search(6, VirusPattern(2, 4), SearchMode::ALL, 4);
    auto line = report_line(direct, true);
    REQUIRE(report_line(streamed, true) == line);
    REQUIRE(report_line(threaded, true) == line);
    REQUIRE(direct.saturated_count == threaded.saturated_count);
}

TEST_CASE("all_saturated_graphs matches the search accounting") {
    auto sats = all_saturated_graphs(6, VirusPattern(2, 4), SearchMode::ALL);
    auto rep = saturation_search(6, VirusPattern(2, 4), SearchMode::ALL);
    REQUIRE(static_cast<long>(sats.size()) == rep.saturated_count);
    int best = 1000;
    for (const Graph& g : sats) best = std::min(best, g.edge_count());
    REQUIRE(rep.sat_value == best);
}
