#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "satlab/graph.hpp"
#include "satlab/graph6.hpp"

using namespace satlab;

TEST_CASE("graph6 known encodings") {
    REQUIRE(encode_graph6(complete_graph(3)) == "Bw");
    REQUIRE(encode_graph6(complete_graph(2)) == "A_");
    REQUIRE(encode_graph6(empty_graph(2)) == "A?");
    REQUIRE(encode_graph6(empty_graph(1)) == "@");
    REQUIRE(encode_graph6(empty_graph(0)) == "?");
    Graph path3(3);
    path3.add_edge(0, 1);
    path3.add_edge(1, 2);
    REQUIRE(encode_graph6(path3) == "Bg");
    REQUIRE(decode_graph6("Bw") == complete_graph(3));
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937 rng(20240811);
    for (int n = 0; n <= 12; ++n) {
        for (int rep = 0; rep < 40; ++rep) {
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() & 1) g.add_edge(u, v);
            REQUIRE(decode_graph6(encode_graph6(g)) == g);
        }
    }
    // boundary of the short form
    REQUIRE(decode_graph6(encode_graph6(complete_graph(62))) == complete_graph(62));
    REQUIRE_THROWS_AS(encode_graph6(complete_graph(63)), capacity_error);
}

TEST_CASE("graph6 decode errors carry offsets") {
    auto offset_of = [](const std::string& text) {
        try {
            decode_graph6(text);
        } catch (const parse_error& e) {
            return static_cast<long>(e.offset);
        }
        return -1L;
    };
    REQUIRE(offset_of("") == 0);
    REQUIRE(offset_of("B") == 1);        // truncated
    REQUIRE(offset_of("Bw ") == 2);      // byte outside alphabet
    REQUIRE(offset_of("Bwz") == 2);      // trailing garbage
    REQUIRE(offset_of("B{") == 1);       // nonzero padding bits
    REQUIRE(offset_of("~??") == 0);      // long form marker unsupported
    REQUIRE(offset_of("Bw") == -1);      // clean record
}

TEST_CASE("read_graph6_lines reports the failing line") {
    std::istringstream ok("Bw\n\nA_\r\n");
    auto graphs = read_graph6_lines(ok);
    REQUIRE(graphs.size() == 2);
    REQUIRE(graphs[0] == complete_graph(3));
    REQUIRE(graphs[1] == complete_graph(2));

    std::istringstream bad("Bw\nB\n");
    try {
        read_graph6_lines(bad);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        REQUIRE(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("dot output lists edges then isolated vertices") {
    Graph g(3);
    g.add_edge(0, 1);
    REQUIRE(encode_dot(g) == "graph {\n  0 -- 1;\n  2;\n}\n");
}
