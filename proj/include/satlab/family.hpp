#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "satlab/canonical.hpp"
#include "satlab/errors.hpp"
#include "satlab/graph.hpp"
#include "satlab/graph6.hpp"

namespace satlab {

// K_{alpha-2} joined to an independent set, the classical minimum
// K_alpha-saturated graph
inline Graph ehm_graph(int n, int alpha) {
    if (alpha < 3) throw precondition_error("ehm_graph requires alpha >= 3");
    if (n < alpha) throw precondition_error("ehm_graph requires n >= alpha");
    return join(complete_graph(alpha - 2), empty_graph(n - alpha + 2));
}

// clique attachments over a base graph: vertex i of the base is joined to all
// vertices of p[i] copies of K_{t-1} and to exactly t-2 vertices of q[i]
// copies of K_t
struct AttachmentSpec {
    Graph base;
    int t = 4;
    std::vector<int> p;
    std::vector<int> q;
};

namespace detail {

inline bool base_is(const Graph& base, const Graph& reference) {
    return base.order() == reference.order() && is_isomorphic(base, reference);
}

} // namespace detail

// enforce the family's side conditions; `constraint` on the thrown error
// reports which rule failed (0 is shape)
inline void validate_attachment_spec(const AttachmentSpec& spec) {
    int h = spec.base.order();
    if (spec.t < 3) throw validation_error("attachment parameter t must be at least 3", 0);
    if (static_cast<int>(spec.p.size()) != h || static_cast<int>(spec.q.size()) != h)
        throw validation_error("p and q must have one entry per base vertex", 0);
    for (int i = 0; i < h; ++i)
        if (spec.p[i] < 0 || spec.q[i] < 0)
            throw validation_error("attachment counts must be nonnegative", 0);

    auto attached = [&](int i) { return spec.p[i] + spec.q[i] != 0; };
    int attached_count = 0;
    for (int i = 0; i < h; ++i) attached_count += attached(i);

    if (detail::base_is(spec.base, complete_graph(2))) {
        for (int i = 0; i < h; ++i)
            if (spec.q[i] == 0 && spec.p[i] == 1)
                throw validation_error(
                    "base K_2 forbids exactly one plain clique on a vertex with no bridged clique",
                    1);
    }
    if (spec.t >= 4 &&
        detail::base_is(spec.base, join(complete_graph(spec.t - 2), empty_graph(2)))) {
        if (attached_count < 2)
            throw validation_error("this base requires attachments on at least two vertices", 2);
    }
    if (detail::base_is(spec.base, join(complete_graph(2), empty_graph(3)))) {
        bool high_degree_attached = false;
        for (int i = 0; i < h; ++i)
            if (attached(i) && spec.base.degree(i) == 4) high_degree_attached = true;
        if (attached_count < 2 && !high_degree_attached)
            throw validation_error(
                "this base requires attachments on two vertices or on a degree-4 vertex", 3);
    }
}

// order of the graph the spec describes
inline int attachment_order(const AttachmentSpec& spec) {
    int n = spec.base.order();
    for (int i = 0; i < spec.base.order(); ++i)
        n += spec.p[i] * (spec.t - 1) + spec.q[i] * spec.t;
    return n;
}

// deterministic layout: base vertices first, then for each base vertex in
// ascending order its plain K_{t-1} blocks followed by its bridged K_t blocks
inline Graph build_family_member(const AttachmentSpec& spec) {
    validate_attachment_spec(spec);
    int n = attachment_order(spec);
    if (n > kMaxOrder) throw capacity_error("family member exceeds " +
                                            std::to_string(kMaxOrder) + " vertices");
    Graph g(n);
    int h = spec.base.order();
    for (auto [u, v] : spec.base.edges()) g.add_edge(u, v);
    int next = h;
    for (int i = 0; i < h; ++i) {
        for (int copy = 0; copy < spec.p[i]; ++copy) {
            for (int a = 0; a < spec.t - 1; ++a) {
                g.add_edge(i, next + a);
                for (int b = a + 1; b < spec.t - 1; ++b) g.add_edge(next + a, next + b);
            }
            next += spec.t - 1;
        }
        for (int copy = 0; copy < spec.q[i]; ++copy) {
            for (int a = 0; a < spec.t; ++a) {
                if (a < spec.t - 2) g.add_edge(i, next + a);
                for (int b = a + 1; b < spec.t; ++b) g.add_edge(next + a, next + b);
            }
            next += spec.t;
        }
    }
    return g;
}

namespace detail {

// weak compositions of `total` into `parts` cells
inline void compositions(int total, int parts, std::vector<int>& cur,
                         const std::function<void(const std::vector<int>&)>& fn) {
    if (parts == 1) {
        cur.push_back(total);
        fn(cur);
        cur.pop_back();
        return;
    }
    for (int head = 0; head <= total; ++head) {
        cur.push_back(head);
        compositions(total - head, parts - 1, cur, fn);
        cur.pop_back();
    }
}

} // namespace detail

// all members of order n over the given base up to isomorphism, as canonical
// graph6 strings in sorted order; simple_only restricts to q = 0
inline std::vector<std::string> enumerate_family_members(const Graph& base, int t, int n,
                                                         bool simple_only = false) {
    int h = base.order();
    int rest = n - h;
    if (rest < 0) return {};
    std::set<std::string> out;
    std::vector<int> p;
    // (t-1) * sum(p) + t * sum(q) = rest
    for (int qsum = 0; t * qsum <= rest; ++qsum) {
        if (simple_only && qsum > 0) break;
        int prest = rest - t * qsum;
        if (prest % (t - 1) != 0) continue;
        int psum = prest / (t - 1);
        detail::compositions(psum, h, p, [&](const std::vector<int>& pv) {
            std::vector<int> q;
            detail::compositions(qsum, h, q, [&](const std::vector<int>& qv) {
                AttachmentSpec spec{base, t, pv, qv};
                try {
                    validate_attachment_spec(spec);
                } catch (const validation_error&) {
                    return;
                }
                out.insert(canonical_graph6(build_family_member(spec)));
            });
        });
    }
    return {out.begin(), out.end()};
}

// every minimum saturated graph for the two-leaf t=4 pattern at order n >= 6:
// attachment families over K_2, K_3, and the joins K_2 v (k-2)K_1 for
// 4 <= k <= p with p >= 6, each padded by disjoint K_5 components
inline std::vector<std::string> k24_extremal_family(int n) {
    if (n < 6) throw precondition_error("the family is defined for n >= 6");
    std::set<std::string> out;
    auto pad = [&](const std::string& code6, int copies5) {
        Graph g = decode_graph6(code6);
        for (int i = 0; i < copies5; ++i) g = disjoint_union(g, complete_graph(5));
        out.insert(canonical_graph6(g));
    };
    for (int j = 0; 5 * j <= n - 2; ++j) {
        int q = n - 5 * j;
        for (const std::string& m : enumerate_family_members(complete_graph(2), 4, q))
            pad(m, j);
        if (q >= 3)
            for (const std::string& m : enumerate_family_members(complete_graph(3), 4, q))
                pad(m, j);
        if (q >= 6)
            for (int k = 4; k <= q; ++k) {
                Graph base = join(complete_graph(2), empty_graph(k - 2));
                for (const std::string& m : enumerate_family_members(base, 4, q)) pad(m, j);
            }
    }
    return {out.begin(), out.end()};
}

// base of the unique minimum family for connected two-leaf saturation at a
// given order: K_1 at n = 2t-1, the join K_{t-2} v 2K_1 at residue 1, K_r at
// residue r in 2..t-1 (residue 0 counts as t-1)
struct CsatFamilyId {
    std::string base_name;
    Graph base;
};

inline CsatFamilyId csat_extremal_family_id(int n, int t) {
    if (t < 5 || n < t + 2)
        throw precondition_error("connected minimum family requires n >= t+2 >= 7");
    if (n == 2 * t - 1) return {"K1", complete_graph(1)};
    int r = n % (t - 1);
    if (r == 0) r = t - 1;
    if (r == 1)
        return {"K" + std::to_string(t - 2) + "v2K1",
                join(complete_graph(t - 2), empty_graph(2))};
    return {"K" + std::to_string(r), complete_graph(r)};
}

// component counts of the minimum construction for the two-leaf pattern at
// general t: a simple attachment family over K_gamma plus beta disjoint
// K_{t+1} components
struct BetaGamma {
    int beta = 0;
    int gamma = 0;
};

inline BetaGamma beta_gamma(int n, int t) {
    int f = n % (t - 1);
    if (f == 0) f = t - 1;
    BetaGamma r;
    if (t % 2 == 0) {
        int half = t / 2;
        if (f >= half + 2) {
            if ((f + half) % 2 == 0) r = {(2 * f - t) / 4, half};
            else r = {(2 * f - t - 2) / 4, half + 1};
        } else if (f == half + 1) {
            r = {half, half};
        } else if (f == half) {
            r = {(t - 2) / 2, half + 1};
        } else {
            if ((f + half) % 2 == 0) r = {(2 * f + t - 4) / 4, half + 1};
            else r = {(2 * f + t - 2) / 4, half};
        }
    } else {
        int half = (t + 1) / 2;
        if (f >= half + 1) {
            if ((f + half) % 2 == 0) r = {(2 * f - t - 1) / 4, half};
            else r = {(2 * f - t + 1) / 4, half - 1};
        } else if (f == half) {
            r = {(t - 1) / 2, half};
        } else {
            if ((f + half) % 2 == 0) r = {(2 * f + t - 3) / 4, half};
            else r = {(2 * f + t - 5) / 4, half + 1};
        }
    }
    if (r.beta < 1 || r.gamma < 1) throw internal_error("construction table gave beta or gamma < 1");
    return r;
}

// smallest order the minimum construction covers for a given t
inline int construction_min_order(int t) { return (t * t + 3 * t - 2) / 2; }

// minimum saturated graph for the two-leaf pattern at general t >= 5: k plain
// K_{t-1} blocks on one vertex of K_gamma, plus beta K_{t+1} components
inline Graph two_leaf_minimum_construction(int n, int t) {
    if (t < 5) throw precondition_error("construction requires t >= 5");
    if (n < construction_min_order(t))
        throw precondition_error("construction requires n >= " +
                                 std::to_string(construction_min_order(t)));
    BetaGamma bg = beta_gamma(n, t);
    int n1 = n - bg.beta * (t + 1);
    if ((n1 - bg.gamma) % (t - 1) != 0)
        throw internal_error("construction block count is not integral");
    int k = (n1 - bg.gamma) / (t - 1);
    if (k < 1) throw internal_error("construction block count must be positive");
    if (bg.gamma == 2 && k == 1) throw internal_error("construction hit the forbidden K_2 shape");
    std::vector<int> p(bg.gamma, 0), q(bg.gamma, 0);
    p[0] = k;
    Graph g = build_family_member({complete_graph(bg.gamma), t, p, q});
    for (int i = 0; i < bg.beta; ++i) g = disjoint_union(g, complete_graph(t + 1));
    return g;
}

// minimum constructions for the three-leaf triangle pattern
enum class K33Variant { ODD, EVEN, PENDANT };

inline Graph k33_extremal(int n, K33Variant variant) {
    switch (variant) {
        case K33Variant::ODD:
            if (n < 7 || n % 2 == 0) throw precondition_error("variant needs odd n >= 7");
            return join(complete_graph(1), copies((n - 1) / 2, complete_graph(2)));
        case K33Variant::EVEN:
            if (n < 8 || n % 2 == 1) throw precondition_error("variant needs even n >= 8");
            return join(complete_graph(1),
                        disjoint_union(copies((n - 4) / 2, complete_graph(2)), complete_graph(3)));
        case K33Variant::PENDANT:
            if (n < 8 || n % 3 != 2) throw precondition_error("variant needs n = 2 mod 3, n >= 8");
            return join(complete_graph(1),
                        disjoint_union(complete_graph(1), copies((n - 2) / 3, complete_graph(3))));
    }
    throw precondition_error("unknown variant");
}

} // namespace satlab
