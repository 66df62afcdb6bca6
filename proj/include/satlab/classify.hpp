#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "satlab/graph.hpp"
#include "satlab/metrics.hpp"
#include "satlab/virus.hpp"

namespace satlab {

// reachability restricted to `allowed`; start must lie in allowed
inline std::uint64_t reachable_mask_within(const Graph& g, int start, std::uint64_t allowed) {
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
        next &= allowed;
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

inline bool is_cut_vertex(const Graph& g, int v) {
    std::uint64_t comp = reachable_mask(g, v);
    std::uint64_t rest = comp & ~(std::uint64_t{1} << v);
    if (rest == 0) return false;
    int w = std::countr_zero(rest);
    return reachable_mask_within(g, w, g.vertex_mask() & ~(std::uint64_t{1} << v)) != rest;
}

enum class KtKind { TYPE_I, TYPE_II, NONE };

inline std::string to_string(KtKind k) {
    switch (k) {
        case KtKind::TYPE_I: return "type-I";
        case KtKind::TYPE_II: return "type-II";
        default: return "none";
    }
}

// classification of one K_t copy:
//  - type-I: some clique vertex is a cut vertex and every other clique vertex
//    has degree t-1 in G; the cut vertex is "lucky", the rest form the
//    "unlucky" K_{t-1}
//  - type-II: exactly two clique vertices have degree t-1, the other t-2 have
//    degree t and share one common neighbor outside the clique (the apex)
struct KtClassification {
    std::vector<int> clique; // ascending
    KtKind kind = KtKind::NONE;
    int lucky_vertex = -1;   // type-I only
    int apex = -1;           // type-II only
};

namespace detail {

inline KtClassification classify_one_clique(const Graph& g, const std::vector<int>& clique, int t) {
    KtClassification out;
    out.clique = clique;
    std::uint64_t cmask = mask_of(clique);
    std::vector<int> off_degree; // clique vertices with degree != t-1
    for (int v : clique)
        if (g.degree(v) != t - 1) off_degree.push_back(v);

    if (off_degree.size() <= 1) {
        // with every clique degree t-1 the component is a bare K_t and has no
        // cut vertex, so only the single off-degree vertex can be lucky
        if (off_degree.size() == 1 && is_cut_vertex(g, off_degree.front())) {
            out.kind = KtKind::TYPE_I;
            out.lucky_vertex = off_degree.front();
        }
        return out;
    }

    if (off_degree.size() == static_cast<std::size_t>(t) - 2) {
        bool degrees_ok = true;
        for (int v : off_degree)
            if (g.degree(v) != t) { degrees_ok = false; break; }
        if (degrees_ok) {
            int apex = -1;
            bool common = true;
            for (int v : off_degree) {
                std::uint64_t outside = g.row(v) & ~cmask;
                if (std::popcount(outside) != 1) { common = false; break; }
                int w = std::countr_zero(outside);
                if (apex < 0) apex = w;
                else if (apex != w) { common = false; break; }
            }
            if (common && apex >= 0) {
                out.kind = KtKind::TYPE_II;
                out.apex = apex;
                return out;
            }
        }
    }
    return out;
}

} // namespace detail

// classify every K_t copy of g, cliques in lexicographic order
inline std::vector<KtClassification> classify_kt_copies(const Graph& g, int t) {
    if (t < 4) throw precondition_error("K_t classification needs t >= 4");
    std::vector<KtClassification> out;
    enumerate_cliques(g, t, [&](const std::vector<int>& clique) {
        out.push_back(detail::classify_one_clique(g, clique, t));
        return true;
    });
    return out;
}

// core extraction: drop every type-II K_t entirely and every type-I copy
// minus its lucky vertex. when the dropped sets are pairwise disjoint the
// removed count is b(t-1) + c t for b type-I and c type-II copies.
struct CoreResult {
    Graph core;
    std::uint64_t core_mask = 0;   // surviving vertices in g's labeling
    int removed_vertices = 0;      // actual count removed
    int type1_count = 0;           // b
    int type2_count = 0;           // c
    bool removed_sets_disjoint = true;
};

inline CoreResult derive_core(const Graph& g, int t) {
    CoreResult res;
    std::uint64_t removed = 0;
    int sum_sizes = 0;
    for (const auto& cls : classify_kt_copies(g, t)) {
        std::uint64_t drop = 0;
        if (cls.kind == KtKind::TYPE_I) {
            drop = detail::mask_of(cls.clique) & ~(std::uint64_t{1} << cls.lucky_vertex);
            ++res.type1_count;
        } else if (cls.kind == KtKind::TYPE_II) {
            drop = detail::mask_of(cls.clique);
            ++res.type2_count;
        } else {
            continue;
        }
        sum_sizes += std::popcount(drop);
        removed |= drop;
    }
    res.removed_sets_disjoint = sum_sizes == std::popcount(removed);
    res.removed_vertices = std::popcount(removed);
    res.core_mask = g.vertex_mask() & ~removed;
    res.core = g.induced(res.core_mask);
    return res;
}

} // namespace satlab
