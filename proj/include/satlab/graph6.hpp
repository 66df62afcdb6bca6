#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "satlab/graph.hpp"

namespace satlab {

// graph6 codec, short form only (order <= 62): byte order+63, then the
// upper-triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian
// into 6-bit groups, zero padded, each group emitted as value+63

inline std::string encode_graph6(const Graph& g) {
    if (g.order() > 62)
        throw capacity_error("graph6 short form limited to order 62, got " +
                             std::to_string(g.order()));
    std::string out;
    out.push_back(static_cast<char>(g.order() + 63));
    int group = 0, bits = 0;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((group << (6 - bits)) + 63));
    return out;
}

inline Graph decode_graph6(std::string_view text) {
    if (text.empty()) throw parse_error("empty graph6 record", 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw parse_error("byte outside graph6 alphabet", i);
    }
    int n = static_cast<unsigned char>(text[0]) - 63;
    if (n > 62) throw parse_error("unsupported graph6 long form", 0);
    std::size_t pair_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t need = 1 + (pair_bits + 5) / 6;
    if (text.size() < need) throw parse_error("graph6 record truncated", text.size());
    if (text.size() > need) throw parse_error("trailing garbage after graph6 record", need);
    Graph g(n);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = static_cast<unsigned char>(text[1 + bit / 6]) - 63;
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // zero padding is part of the format; a set pad bit means corruption
    for (std::size_t b = pair_bits; b < (need - 1) * 6; ++b) {
        int byte = static_cast<unsigned char>(text[1 + b / 6]) - 63;
        if ((byte >> (5 - b % 6)) & 1) throw parse_error("nonzero graph6 padding", 1 + b / 6);
    }
    return g;
}

// one graph per non-empty line; parse errors are rethrown with the line number
inline std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            graphs.push_back(decode_graph6(line));
        } catch (const parse_error& e) {
            throw parse_error("line " + std::to_string(lineno) + ": " + e.what(), e.offset);
        }
    }
    return graphs;
}

// DOT form for visual inspection; edges first, then isolated vertices
inline std::string encode_dot(const Graph& g) {
    std::string out = "graph {\n";
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) out += "  " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

} // namespace satlab
