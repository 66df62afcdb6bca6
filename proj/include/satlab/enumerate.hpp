#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "satlab/canonical.hpp"
#include "satlab/metrics.hpp"

namespace satlab {

inline constexpr int kDefaultEnumerationLimit = 9;
inline constexpr int kEnumerationCeiling = 12;

namespace detail {

// isomorph-free generation at fixed order by canonical edge augmentation:
// a child G+e is kept iff e lies in the same automorphism orbit as the edge
// whose canonical image is the last set bit of the canonical code. one
// non-edge per parent orbit is tried, so every class appears exactly once.
class AugmentationEnumerator {
  public:
    AugmentationEnumerator(int n, bool connected_only, const std::function<void(const Graph&)>& visit)
        : n_(n), connected_only_(connected_only), visit_(visit) {}

    void run() {
        Graph root(n_);
        expand(root, pair_orbits(root));
    }

  private:
    void expand(const Graph& g, PairOrbits orbits) {
        if (!connected_only_ || is_connected(g)) visit_(g);
        std::vector<char> seen(static_cast<std::size_t>(n_ * (n_ - 1) / 2), 0);
        for (int j = 1; j < n_; ++j) {
            for (int i = 0; i < j; ++i) {
                if (g.has_edge(i, j)) continue;
                int root = orbits.find(pair_index(i, j));
                if (seen[static_cast<std::size_t>(root)]) continue;
                seen[static_cast<std::size_t>(root)] = 1;
                Graph child = g;
                child.add_edge(i, j);
                PairOrbits child_orbits = pair_orbits(child);
                if (accepted(child, child_orbits, i, j)) expand(child, std::move(child_orbits));
            }
        }
    }

    bool accepted(const Graph& child, PairOrbits& child_orbits, int ei, int ej) {
        CanonResult canon = canonical_labeling(child);
        // last set bit of the code names the canonical deletion pair
        int bit = -1;
        for (int w = code_word_count(n_) - 1; w >= 0 && bit < 0; --w) {
            std::uint64_t word = canon.code.words[static_cast<std::size_t>(w)];
            if (word) bit = (w << 6) + (63 - std::countr_zero(word));
        }
        int jstar = 1;
        while (pair_index(0, jstar + 1) <= bit) ++jstar;
        int istar = bit - pair_index(0, jstar);
        // pull the pair back through the canonical labeling
        int du = -1, dv = -1;
        for (int v = 0; v < n_; ++v) {
            if (canon.position[static_cast<std::size_t>(v)] == istar) du = v;
            if (canon.position[static_cast<std::size_t>(v)] == jstar) dv = v;
        }
        return child_orbits.same_pair_orbit(du, dv, ei, ej);
    }

    int n_;
    bool connected_only_;
    const std::function<void(const Graph&)>& visit_;
};

} // namespace detail

// every isomorphism class of order n exactly once, deterministic depth-first
// order; connected_only filters at yield time
inline void enumerate_graphs(int n, bool connected_only,
                             const std::function<void(const Graph&)>& visit,
                             int limit = kDefaultEnumerationLimit) {
    if (n < 1) throw precondition_error("enumeration order must be at least 1");
    int effective = std::min(limit, kEnumerationCeiling);
    if (n > effective)
        throw capacity_error("enumeration at order " + std::to_string(n) +
                             " exceeds the exhaustive limit " + std::to_string(effective) +
                             "; raise SATLAB_MAX_N (hard ceiling " +
                             std::to_string(kEnumerationCeiling) + ")");
    detail::AugmentationEnumerator en(n, connected_only, visit);
    en.run();
}

} // namespace satlab
