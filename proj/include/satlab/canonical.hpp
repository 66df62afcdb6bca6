#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "satlab/graph.hpp"
#include "satlab/graph6.hpp"

namespace satlab {

// upper-triangle bits of the canonically relabeled graph, packed big-endian
// into 64-bit words in the same pair order graph6 uses; two graphs get equal
// codes exactly when they are isomorphic
struct CanonicalCode {
    int order = 0;
    std::vector<std::uint64_t> words;

    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
        if (auto c = a.order <=> b.order; c != 0) return c;
        return a.words <=> b.words;
    }
};

namespace detail {

// pair (i, j) with i < j at stream position j(j-1)/2 + i
inline int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

inline int code_word_count(int n) { return (n * (n - 1) / 2 + 63) / 64; }

// equitable refinement of an ordered partition: split every cell by neighbor
// count into every cell, fragments ordered by count ascending, restart after
// each split; the evolution depends only on isomorphism-invariant data
inline void refine_partition(const Graph& g, std::vector<std::uint64_t>& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            for (std::size_t d = 0; d < cells.size() && !changed; ++d) {
                std::uint64_t cell = cells[d];
                if (std::popcount(cell) <= 1) continue;
                std::array<std::uint64_t, kMaxOrder> bucket{};
                int maxc = 0, firstc = -1;
                bool split = false;
                std::uint64_t m = cell;
                while (m) {
                    int v = std::countr_zero(m);
                    m &= m - 1;
                    int c = std::popcount(g.row(v) & cells[s]);
                    bucket[static_cast<std::size_t>(c)] |= std::uint64_t{1} << v;
                    if (firstc < 0) firstc = c;
                    else if (c != firstc) split = true;
                    maxc = std::max(maxc, c);
                }
                if (!split) continue;
                std::vector<std::uint64_t> frags;
                for (int c = 0; c <= maxc; ++c)
                    if (bucket[static_cast<std::size_t>(c)]) frags.push_back(bucket[static_cast<std::size_t>(c)]);
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(d));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(d), frags.begin(), frags.end());
                changed = true;
            }
        }
    }
}

// true when every cell is internally complete or empty and every cell pair is
// fully joined or fully separated; then any cell-respecting labeling yields
// the same adjacency matrix, so one leaf stands for the whole subtree
inline bool partition_homogeneous(const Graph& g, const std::vector<std::uint64_t>& cells) {
    for (std::size_t a = 0; a < cells.size(); ++a) {
        int sa = std::popcount(cells[a]);
        int va = std::countr_zero(cells[a]);
        int self = std::popcount(g.row(va) & cells[a]);
        if (self != 0 && self != sa - 1) return false;
        for (std::size_t b = 0; b < cells.size(); ++b) {
            if (a == b) continue;
            int cross = std::popcount(g.row(va) & cells[b]);
            if (cross != 0 && cross != std::popcount(cells[b])) return false;
        }
    }
    return true;
}

struct CodeBits {
    std::array<std::uint64_t, 32> w{};
};

struct CanonResult {
    CanonicalCode code;
    std::vector<int> position; // vertex -> canonical position
};

class CanonSearcher {
  public:
    explicit CanonSearcher(const Graph& g)
        : g_(g), n_(g.order()), nwords_(code_word_count(g.order())) {}

    CanonResult run() {
        CanonResult out;
        out.code.order = n_;
        if (n_ == 0) return out;
        std::vector<std::uint64_t> cells{g_.vertex_mask()};
        search(std::move(cells));
        out.code.words.assign(best_.w.begin(), best_.w.begin() + nwords_);
        out.position = best_pos_;
        return out;
    }

  private:
    static constexpr std::size_t kMaxStoredAuts = 96;

    void search(std::vector<std::uint64_t> cells) {
        refine_partition(g_, cells);
        std::size_t target = cells.size();
        for (std::size_t k = 0; k < cells.size(); ++k)
            if (std::popcount(cells[k]) > 1) { target = k; break; }
        if (target == cells.size()) { leaf_discrete(cells); return; }
        if (partition_homogeneous(g_, cells)) { leaf_expand(cells); return; }

        std::uint64_t cand = cells[target];
        std::uint64_t tried = 0;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            if (tried != 0 && pruned_by_automorphism(v, tried)) { tried |= std::uint64_t{1} << v; continue; }
            std::vector<std::uint64_t> child;
            child.reserve(cells.size() + 1);
            for (std::size_t k = 0; k < target; ++k) child.push_back(cells[k]);
            child.push_back(std::uint64_t{1} << v);
            child.push_back(cells[target] & ~(std::uint64_t{1} << v));
            for (std::size_t k = target + 1; k < cells.size(); ++k) child.push_back(cells[k]);
            path_.push_back(v);
            search(std::move(child));
            path_.pop_back();
            tried |= std::uint64_t{1} << v;
        }
    }

    void leaf_discrete(const std::vector<std::uint64_t>& cells) {
        std::array<int, kMaxOrder> vert{};
        for (std::size_t k = 0; k < cells.size(); ++k) vert[k] = std::countr_zero(cells[k]);
        finish_leaf(vert);
    }

    void leaf_expand(const std::vector<std::uint64_t>& cells) {
        std::array<int, kMaxOrder> vert{};
        int p = 0;
        for (std::uint64_t cell : cells) {
            std::uint64_t m = cell;
            while (m) {
                vert[static_cast<std::size_t>(p++)] = std::countr_zero(m);
                m &= m - 1;
            }
        }
        finish_leaf(vert);
    }

    void finish_leaf(const std::array<int, kMaxOrder>& vert) {
        CodeBits code;
        int bit = 0;
        for (int j = 1; j < n_; ++j) {
            std::uint64_t rowj = g_.row(vert[static_cast<std::size_t>(j)]);
            for (int i = 0; i < j; ++i, ++bit)
                if ((rowj >> vert[static_cast<std::size_t>(i)]) & 1u)
                    code.w[static_cast<std::size_t>(bit >> 6)] |= std::uint64_t{1} << (63 - (bit & 63));
        }
        int cmp = -1;
        if (have_best_) {
            cmp = 0;
            for (int k = 0; k < nwords_; ++k) {
                if (code.w[static_cast<std::size_t>(k)] != best_.w[static_cast<std::size_t>(k)]) {
                    cmp = code.w[static_cast<std::size_t>(k)] < best_.w[static_cast<std::size_t>(k)] ? -1 : 1;
                    break;
                }
            }
        }
        if (cmp < 0) {
            best_ = code;
            have_best_ = true;
            best_pos_.assign(static_cast<std::size_t>(n_), 0);
            for (int k = 0; k < n_; ++k) best_pos_[static_cast<std::size_t>(vert[static_cast<std::size_t>(k)])] = k;
            best_vert_ = vert;
        } else if (cmp == 0 && auts_.size() < kMaxStoredAuts) {
            // two labelings reached the same matrix; their quotient fixes g
            std::vector<int> a(static_cast<std::size_t>(n_));
            for (int k = 0; k < n_; ++k)
                a[static_cast<std::size_t>(vert[static_cast<std::size_t>(k)])] = best_vert_[static_cast<std::size_t>(k)];
            if (std::find(auts_.begin(), auts_.end(), a) == auts_.end()) auts_.push_back(std::move(a));
        }
    }

    // sound pruning: candidates equivalent to an already-tried one under an
    // automorphism fixing every individualized vertex explore the same codes
    bool pruned_by_automorphism(int v, std::uint64_t tried) {
        if (auts_.empty()) return false;
        std::array<int, kMaxOrder> par{};
        for (int i = 0; i < n_; ++i) par[static_cast<std::size_t>(i)] = i;
        auto find = [&](int x) {
            while (par[static_cast<std::size_t>(x)] != x) {
                par[static_cast<std::size_t>(x)] = par[static_cast<std::size_t>(par[static_cast<std::size_t>(x)])];
                x = par[static_cast<std::size_t>(x)];
            }
            return x;
        };
        bool any = false;
        for (const auto& a : auts_) {
            bool fixes = true;
            for (int x : path_)
                if (a[static_cast<std::size_t>(x)] != x) { fixes = false; break; }
            if (!fixes) continue;
            any = true;
            for (int x = 0; x < n_; ++x) {
                int ra = find(x), rb = find(a[static_cast<std::size_t>(x)]);
                if (ra != rb) par[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
            }
        }
        if (!any) return false;
        int rv = find(v);
        std::uint64_t m = tried;
        while (m) {
            int u = std::countr_zero(m);
            m &= m - 1;
            if (find(u) == rv) return true;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    int nwords_;
    CodeBits best_{};
    bool have_best_ = false;
    std::vector<int> best_pos_;
    std::array<int, kMaxOrder> best_vert_{};
    std::vector<std::vector<int>> auts_;
    std::vector<int> path_;
};

} // namespace detail

inline detail::CanonResult canonical_labeling(const Graph& g) { return detail::CanonSearcher(g).run(); }

inline CanonicalCode canonical_form(const Graph& g) { return canonical_labeling(g).code; }

inline Graph canonical_graph(const Graph& g) {
    if (g.order() == 0) return g;
    return g.relabeled(canonical_labeling(g).position);
}

inline std::string canonical_graph6(const Graph& g) { return encode_graph6(canonical_graph(g)); }

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

// complete enumeration of the automorphism group; fn gets each permutation
// (vertex -> vertex) and returns false to stop early. candidates are confined
// to equitable-refinement cells, which every automorphism preserves.
template <class F>
void for_each_automorphism(const Graph& g, F&& fn) {
    int n = g.order();
    if (n == 0) return;
    std::vector<std::uint64_t> cells{g.vertex_mask()};
    detail::refine_partition(g, cells);
    std::vector<int> vs;
    vs.reserve(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> cellmask(static_cast<std::size_t>(n), 0);
    for (std::uint64_t cell : cells) {
        std::uint64_t m = cell;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            vs.push_back(v);
            cellmask[static_cast<std::size_t>(v)] = cell;
        }
    }
    std::vector<int> img(static_cast<std::size_t>(n), -1);
    std::uint64_t used = 0;
    auto rec = [&](auto&& self, int k) -> bool {
        if (k == n) return fn(static_cast<const std::vector<int>&>(img));
        int v = vs[static_cast<std::size_t>(k)];
        std::uint64_t cand = cellmask[static_cast<std::size_t>(v)] & ~used;
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            bool ok = true;
            for (int t = 0; t < k; ++t) {
                int u = vs[static_cast<std::size_t>(t)];
                if (((g.row(v) >> u) & 1u) !=
                    ((g.row(w) >> img[static_cast<std::size_t>(u)]) & 1u)) { ok = false; break; }
            }
            if (!ok) continue;
            img[static_cast<std::size_t>(v)] = w;
            used |= std::uint64_t{1} << w;
            if (!self(self, k + 1)) return false;
            used &= ~(std::uint64_t{1} << w);
            img[static_cast<std::size_t>(v)] = -1;
        }
        return true;
    };
    rec(rec, 0);
}

// orbits of unordered vertex pairs under the full automorphism group,
// computed by union-find closure over every automorphism (exact)
struct PairOrbits {
    int n = 0;
    std::vector<int> parent;
    int orbit_count = 0;

    int index(int i, int j) const { return i < j ? detail::pair_index(i, j) : detail::pair_index(j, i); }

    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        --orbit_count;
    }

    bool same_pair_orbit(int i, int j, int k, int l) { return find(index(i, j)) == find(index(k, l)); }
};

inline PairOrbits pair_orbits(const Graph& g) {
    PairOrbits po;
    po.n = g.order();
    int np = g.order() * (g.order() - 1) / 2;
    po.parent.resize(static_cast<std::size_t>(np));
    for (int i = 0; i < np; ++i) po.parent[static_cast<std::size_t>(i)] = i;
    po.orbit_count = np;
    if (np <= 1) return po;
    for_each_automorphism(g, [&](const std::vector<int>& a) {
        for (int j = 1; j < po.n; ++j)
            for (int i = 0; i < j; ++i)
                po.unite(detail::pair_index(i, j),
                         po.index(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(j)]));
        return po.orbit_count > 1; // a single orbit cannot coarsen further
    });
    return po;
}

} // namespace satlab
