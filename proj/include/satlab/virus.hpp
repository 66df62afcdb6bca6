#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satlab/graph.hpp"

namespace satlab {

// the pattern K^s_t: a t-clique with s pendant leaves attached to s distinct
// clique vertices; containment is subgraph containment, not induced
struct VirusPattern {
    int s;
    int t;

    VirusPattern(int s_, int t_) : s(s_), t(t_) {
        if (s < 0 || t < 3 || t < s)
            throw precondition_error("virus pattern needs s >= 0 and t >= max(3, s), got s=" +
                                     std::to_string(s_) + " t=" + std::to_string(t_));
    }

    int order() const { return s + t; }
};

struct VirusEmbedding {
    std::vector<int> center;                  // clique vertices, ascending
    std::vector<std::pair<int, int>> leaves;  // (clique vertex, leaf vertex), ascending by clique vertex
};

namespace detail {

// every k-subset of `allowed` inducing a clique, in lexicographic order of
// the sorted vertex tuple; fn returns false to stop. prefix holds vertices
// already fixed (callers use it to force clique membership).
template <class F>
bool cliques_rec(const Graph& g, int k, std::vector<int>& chosen, std::uint64_t cand, F&& fn) {
    if (static_cast<int>(chosen.size()) == k) return fn(static_cast<const std::vector<int>&>(chosen));
    if (std::popcount(cand) < k - static_cast<int>(chosen.size())) return true;
    std::uint64_t m = cand;
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        chosen.push_back(v);
        std::uint64_t next = cand & g.row(v);
        next &= ~((std::uint64_t{2} << v) - 1); // only vertices above v keep lex order
        if (!cliques_rec(g, k, chosen, next, fn)) { chosen.pop_back(); return false; }
        chosen.pop_back();
    }
    return true;
}

// small deterministic bipartite matcher: left side is a list of clique
// vertices scanned ascending, right side is graph vertices masked by avail
struct LeafMatcher {
    const Graph& g;
    std::uint64_t right_domain;             // vertices usable as leaves
    std::array<int, kMaxOrder> right_match; // right vertex -> left slot, -1 free

    LeafMatcher(const Graph& g_, std::uint64_t domain) : g(g_), right_domain(domain) {
        right_match.fill(-1);
    }

    bool augment(int left_slot, int left_vertex, const std::vector<int>& left, std::uint64_t& visited) {
        std::uint64_t cand = g.row(left_vertex) & right_domain;
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            if ((visited >> w) & 1u) continue;
            visited |= std::uint64_t{1} << w;
            int hold = right_match[static_cast<std::size_t>(w)];
            if (hold < 0 || augment(hold, left[static_cast<std::size_t>(hold)], left, visited)) {
                right_match[static_cast<std::size_t>(w)] = left_slot;
                return true;
            }
        }
        return false;
    }

    // match as many left vertices as possible, scanning them ascending and
    // stopping once `need` are matched; returns the matched count (capped)
    int run(const std::vector<int>& left, int need) {
        int matched = 0;
        for (std::size_t i = 0; i < left.size() && matched < need; ++i) {
            std::uint64_t visited = 0;
            if (augment(static_cast<int>(i), left[i], left, visited)) ++matched;
        }
        return matched;
    }
};

inline std::uint64_t mask_of(const std::vector<int>& vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= std::uint64_t{1} << v;
    return m;
}

} // namespace detail

// every t-subset inducing a clique, lexicographic, each exactly once
inline void enumerate_cliques(const Graph& g, int t, const std::function<bool(const std::vector<int>&)>& fn) {
    if (t < 1 || t > kMaxOrder) throw precondition_error("clique size must be in 1.." + std::to_string(kMaxOrder));
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(t));
    detail::cliques_rec(g, t, chosen, g.vertex_mask(), fn);
}

inline std::vector<std::vector<int>> list_cliques(const Graph& g, int t) {
    std::vector<std::vector<int>> out;
    enumerate_cliques(g, t, [&](const std::vector<int>& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

// first embedding in deterministic order: cliques lexicographically, leaf
// matching grown by scanning clique vertices ascending
inline std::optional<VirusEmbedding> find_virus(const Graph& g, VirusPattern p) {
    if (g.order() < p.order()) return std::nullopt;
    std::optional<VirusEmbedding> found;
    enumerate_cliques(g, p.t, [&](const std::vector<int>& clique) {
        std::uint64_t cmask = detail::mask_of(clique);
        detail::LeafMatcher matcher(g, g.vertex_mask() & ~cmask);
        if (matcher.run(clique, p.s) < p.s) return true;
        VirusEmbedding emb;
        emb.center = clique;
        for (int w = 0; w < g.order(); ++w) {
            int slot = matcher.right_match[static_cast<std::size_t>(w)];
            if (slot >= 0) emb.leaves.emplace_back(clique[static_cast<std::size_t>(slot)], w);
        }
        std::sort(emb.leaves.begin(), emb.leaves.end());
        found = std::move(emb);
        return false;
    });
    return found;
}

inline bool contains_virus(const Graph& g, VirusPattern p) { return find_virus(g, p).has_value(); }

inline bool is_virus_free(const Graph& g, VirusPattern p) { return !contains_virus(g, p); }

namespace detail {

// matching of size `need` on clique vertices `left` with rights drawn from
// `domain`; used for the role-feasibility probes below
inline bool matchable(const Graph& g, const std::vector<int>& left, std::uint64_t domain, int need) {
    if (need <= 0) return true;
    if (static_cast<int>(left.size()) < need) return false;
    LeafMatcher m(g, domain);
    return m.run(left, need) >= need;
}

} // namespace detail

// can vertex u take degree `role_degree` inside some embedded copy of p?
// in-copy degrees are 1 (leaf), t-1 (clique vertex without a leaf) and
// t (clique vertex carrying a leaf); any other degree is infeasible
inline bool role_feasible(const Graph& g, VirusPattern p, int u, int role_degree) {
    if (u < 0 || u >= g.order()) throw precondition_error("role vertex outside graph");
    if (g.order() < p.order()) return false;
    bool feasible = false;
    if (role_degree == p.t - 1) {
        // u in the clique, no leaf on u: the other t-1 clique vertices must
        // host all s leaves
        enumerate_cliques(g, p.t, [&](const std::vector<int>& clique) {
            std::uint64_t cmask = detail::mask_of(clique);
            if (!((cmask >> u) & 1u)) return true;
            std::vector<int> rest;
            for (int c : clique)
                if (c != u) rest.push_back(c);
            if (detail::matchable(g, rest, g.vertex_mask() & ~cmask, p.s)) { feasible = true; return false; }
            return true;
        });
    } else if (role_degree == p.t && p.s >= 1) {
        // u in the clique with a leaf: force one leaf onto u
        enumerate_cliques(g, p.t, [&](const std::vector<int>& clique) {
            std::uint64_t cmask = detail::mask_of(clique);
            if (!((cmask >> u) & 1u)) return true;
            std::vector<int> rest;
            for (int c : clique)
                if (c != u) rest.push_back(c);
            std::uint64_t leaf_cand = g.row(u) & ~cmask;
            while (leaf_cand) {
                int w = std::countr_zero(leaf_cand);
                leaf_cand &= leaf_cand - 1;
                std::uint64_t domain = g.vertex_mask() & ~cmask & ~(std::uint64_t{1} << w);
                if (detail::matchable(g, rest, domain, p.s - 1)) { feasible = true; return false; }
            }
            return true;
        });
    } else if (role_degree == 1 && p.s >= 1) {
        // u as a leaf on some clique vertex c
        enumerate_cliques(g, p.t, [&](const std::vector<int>& clique) {
            std::uint64_t cmask = detail::mask_of(clique);
            if ((cmask >> u) & 1u) return true;
            for (int c : clique) {
                if (!g.has_edge(c, u)) continue;
                std::vector<int> rest;
                for (int d : clique)
                    if (d != c) rest.push_back(d);
                std::uint64_t domain = g.vertex_mask() & ~cmask & ~(std::uint64_t{1} << u);
                if (detail::matchable(g, rest, domain, p.s - 1)) { feasible = true; return false; }
            }
            return true;
        });
    }
    return feasible;
}

// smallest vertex that no embedding of p assigns degree forbidden_degree,
// or nullopt when every vertex takes that role somewhere
inline std::optional<int> role_avoiding_vertex(const Graph& g, VirusPattern p, int forbidden_degree) {
    for (int u = 0; u < g.order(); ++u)
        if (!role_feasible(g, p, u, forbidden_degree)) return u;
    return std::nullopt;
}

} // namespace satlab
