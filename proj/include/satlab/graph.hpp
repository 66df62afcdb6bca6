#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "satlab/errors.hpp"

namespace satlab {

// hard capacity of the adjacency representation (one 64-bit row per vertex)
inline constexpr int kMaxOrder = 64;

// simple undirected graph on vertices 0..order-1, no loops, no multi-edges.
// rows are neighbor bitmasks; the structure is immutable once built.
class Graph {
  public:
    Graph() : order_(0) { adj_.fill(0); }

    explicit Graph(int order) : order_(order) {
        if (order < 0 || order > kMaxOrder)
            throw capacity_error("graph order " + std::to_string(order) + " outside 0.." +
                                 std::to_string(kMaxOrder));
        adj_.fill(0);
    }

    int order() const { return order_; }

    std::uint64_t row(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw precondition_error("loop edge " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
        adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
    }

    int degree(int v) const {
        check_vertex(v);
        return std::popcount(adj_[static_cast<std::size_t>(v)]);
    }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < order_; ++v) twice += std::popcount(adj_[static_cast<std::size_t>(v)]);
        return twice / 2;
    }

    // all vertices as a mask
    std::uint64_t vertex_mask() const {
        return order_ == kMaxOrder ? ~std::uint64_t{0} : (std::uint64_t{1} << order_) - 1;
    }

    // edges in lexicographic order of (u, v), u < v
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count()));
        for (int u = 0; u < order_; ++u) {
            std::uint64_t higher = adj_[static_cast<std::size_t>(u)] >> (u + 1);
            while (higher) {
                int v = u + 1 + std::countr_zero(higher);
                out.emplace_back(u, v);
                higher &= higher - 1;
            }
        }
        return out;
    }

    std::vector<std::pair<int, int>> non_edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < order_; ++u)
            for (int v = u + 1; v < order_; ++v)
                if (!((adj_[static_cast<std::size_t>(u)] >> v) & 1u)) out.emplace_back(u, v);
        return out;
    }

    // subgraph induced on the vertices selected by mask, relabeled to 0..k-1
    // in ascending original order
    Graph induced(std::uint64_t mask) const {
        mask &= vertex_mask();
        std::array<int, kMaxOrder> map{};
        int k = 0;
        for (int v = 0; v < order_; ++v)
            if ((mask >> v) & 1u) map[static_cast<std::size_t>(v)] = k++;
        Graph sub(k);
        for (int v = 0; v < order_; ++v) {
            if (!((mask >> v) & 1u)) continue;
            std::uint64_t nbrs = adj_[static_cast<std::size_t>(v)] & mask;
            while (nbrs) {
                int w = std::countr_zero(nbrs);
                nbrs &= nbrs - 1;
                if (w > v) sub.add_edge(map[static_cast<std::size_t>(v)], map[static_cast<std::size_t>(w)]);
            }
        }
        return sub;
    }

    // graph with vertex v at position perm[v]
    Graph relabeled(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != order_)
            throw precondition_error("relabeling size does not match order");
        Graph out(order_);
        for (auto [u, v] : edges()) out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        return out;
    }

    bool operator==(const Graph& other) const {
        if (order_ != other.order_) return false;
        for (int v = 0; v < order_; ++v)
            if (adj_[static_cast<std::size_t>(v)] != other.adj_[static_cast<std::size_t>(v)]) return false;
        return true;
    }

  private:
    void check_vertex(int v) const {
        if (v < 0 || v >= order_)
            throw precondition_error("vertex " + std::to_string(v) + " outside order " +
                                     std::to_string(order_));
    }

    int order_;
    std::array<std::uint64_t, kMaxOrder> adj_;
};

// ---- graph algebra ----

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph empty_graph(int n) { return Graph(n); }

// disjoint union; b's vertices are shifted past a's
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.order() + b.order() > kMaxOrder)
        throw capacity_error("union order " + std::to_string(a.order() + b.order()) +
                             " exceeds " + std::to_string(kMaxOrder));
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
    return g;
}

// join: disjoint union plus every edge between the two parts
inline Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
    return g;
}

inline Graph copies(int k, const Graph& g) {
    if (k < 0) throw precondition_error("negative copy count");
    Graph out(0);
    for (int i = 0; i < k; ++i) out = disjoint_union(out, g);
    return out;
}

} // namespace satlab
