#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "satlab/graph.hpp"

namespace satlab {

// sentinel for distances and diameters in disconnected graphs
inline constexpr int kInfinite = std::numeric_limits<int>::max();

struct GraphMetrics {
    std::vector<int> degrees;
    int min_degree = 0;
    int max_degree = 0;
    int component_count = 0;
    int diameter = 0; // kInfinite when disconnected, 0 for orders 0 and 1
    bool connected = false;
};

// vertices reachable from start, as a mask
inline std::uint64_t reachable_mask(const Graph& g, int start) {
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.row(v);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

inline bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    return reachable_mask(g, 0) == g.vertex_mask();
}

// BFS distances from start; kInfinite for unreachable vertices
inline std::vector<int> bfs_distances(const Graph& g, int start) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), kInfinite);
    dist[static_cast<std::size_t>(start)] = 0;
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    int d = 0;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.row(v);
        }
        next &= ~seen;
        ++d;
        std::uint64_t n = next;
        while (n) {
            int v = std::countr_zero(n);
            n &= n - 1;
            dist[static_cast<std::size_t>(v)] = d;
        }
        seen |= next;
        frontier = next;
    }
    return dist;
}

// connected component masks, ordered by their smallest vertex
inline std::vector<std::uint64_t> component_masks(const Graph& g) {
    std::vector<std::uint64_t> comps;
    std::uint64_t left = g.vertex_mask();
    while (left) {
        int v = std::countr_zero(left);
        std::uint64_t comp = reachable_mask(g, v);
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

inline GraphMetrics graph_metrics(const Graph& g) {
    GraphMetrics m;
    m.degrees.resize(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) m.degrees[static_cast<std::size_t>(v)] = g.degree(v);
    if (g.order() == 0) {
        m.component_count = 0;
        m.connected = true;
        return m;
    }
    m.min_degree = *std::min_element(m.degrees.begin(), m.degrees.end());
    m.max_degree = *std::max_element(m.degrees.begin(), m.degrees.end());
    m.component_count = static_cast<int>(component_masks(g).size());
    m.connected = m.component_count <= 1;
    if (!m.connected) {
        m.diameter = kInfinite;
        return m;
    }
    int diam = 0;
    for (int v = 0; v < g.order(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int d : dist)
            if (d != kInfinite) diam = std::max(diam, d);
    }
    m.diameter = diam;
    return m;
}

} // namespace satlab
