#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satlab/classify.hpp"
#include "satlab/graph6.hpp"
#include "satlab/metrics.hpp"
#include "satlab/saturation.hpp"

namespace satlab {

// does g contain a path on four distinct vertices as a subgraph? a path
// a-b-c-d around the middle edge bc exists exactly when N(b)\{c} and
// N(c)\{b} are nonempty and are not the same single vertex
inline bool has_p4_subgraph(const Graph& g) {
    for (auto [b, c] : g.edges()) {
        std::uint64_t as = g.row(b) & ~(std::uint64_t{1} << c);
        std::uint64_t ds = g.row(c) & ~(std::uint64_t{1} << b);
        if (as == 0 || ds == 0) continue;
        if (as == ds && std::popcount(as) == 1) continue;
        return true;
    }
    return false;
}

// the four exclusive shapes a degree-2 vertex can take; numbering follows the
// classifier's case split on its two neighbors
enum class Degree2Type { TYPE_I = 1, TYPE_II, TYPE_III, TYPE_IV };

// classify a degree-2 vertex v with neighbors {a, b}:
//  I   one neighbor v1 has degree 2, its other neighbor x != v2 satisfies
//      x~v2 with d(x) >= 3 and d(v2) >= 3
//  II  one neighbor v1 has degree 2 and N(v1) = {v, v2} with d(v2) >= 3
//  III both neighbors have degree >= 3 and are non-adjacent
//  IV  both neighbors have degree >= 3, adjacent, and own distinct extra
//      neighbors outside {v, v1, v2}
// nullopt when no shape fits (both neighbors degree 2, or a failed witness)
inline std::optional<Degree2Type> classify_degree2_vertex(const Graph& g, int v) {
    if (g.degree(v) != 2) throw precondition_error("vertex degree must be 2");
    std::uint64_t nb = g.row(v);
    int a = std::countr_zero(nb);
    int b = std::countr_zero(nb & (nb - 1));
    int da = g.degree(a), db = g.degree(b);
    if (da == 2 && db == 2) return std::nullopt;
    if (da == 2 || db == 2) {
        int v1 = da == 2 ? a : b;
        int v2 = da == 2 ? b : a;
        int x = std::countr_zero(g.row(v1) & ~(std::uint64_t{1} << v));
        if (x == v2) return Degree2Type::TYPE_II;
        if (g.has_edge(x, v2) && g.degree(x) >= 3) return Degree2Type::TYPE_I;
        return std::nullopt;
    }
    if (!g.has_edge(a, b)) return Degree2Type::TYPE_III;
    std::uint64_t extra_a = g.row(a) & ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << b);
    std::uint64_t extra_b = g.row(b) & ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << a);
    bool shared_singleton = extra_a == extra_b && std::popcount(extra_a) == 1;
    if (extra_a != 0 && extra_b != 0 && !shared_singleton) return Degree2Type::TYPE_IV;
    return std::nullopt;
}

enum class AuditContext { K33_CONNECTED, K2T_CONNECTED, K2T_DISCONNECTED, K33_DISCONNECTED };

struct StructuralAudit {
    bool pass = true;
    std::optional<bool> diameter_in_2_4;
    std::optional<bool> p4_free_neighborhoods;
    std::optional<bool> degree2_types_total;
    std::optional<bool> kt_classification_total;
    std::optional<bool> disconnected_decomposition;
    std::vector<std::string> witnesses; // graph6 / vertex evidence for failures
};

namespace detail {

// shape test behind the disconnected decomposition claims: all components but
// at most one are K_{s+t-1}, and the exception is complete of order at most
// s+t-1 or itself saturated for the pattern
inline void audit_decomposition(const Graph& g, VirusPattern p, StructuralAudit& a) {
    int pad = p.order() - 1;
    std::vector<Graph> odd_components;
    for (std::uint64_t mask : component_masks(g)) {
        Graph comp = g.induced(mask);
        bool is_pad_clique = comp.order() == pad && comp.edge_count() == pad * (pad - 1) / 2;
        if (!is_pad_clique) odd_components.push_back(std::move(comp));
    }
    bool ok = true;
    if (odd_components.size() > 1) {
        ok = false;
        a.witnesses.push_back("two components outside the K_" + std::to_string(pad) +
                              " padding: " + encode_graph6(odd_components[0]) + " and " +
                              encode_graph6(odd_components[1]));
    } else if (odd_components.size() == 1) {
        const Graph& g1 = odd_components.front();
        bool complete_small =
            g1.order() <= pad && g1.edge_count() == g1.order() * (g1.order() - 1) / 2;
        if (!complete_small && !is_saturated_fast(g1, p)) {
            ok = false;
            a.witnesses.push_back("residual component neither complete (order <= " +
                                  std::to_string(pad) + ") nor saturated: " + encode_graph6(g1));
        }
    }
    a.disconnected_decomposition = ok;
    a.pass = a.pass && ok;
}

inline void audit_k33_connected(const Graph& g, StructuralAudit& a) {
    GraphMetrics m = graph_metrics(g);
    bool diam_ok = m.diameter >= 2 && m.diameter <= 4;
    if (!diam_ok)
        a.witnesses.push_back("diameter " +
                              (m.diameter == kInfinite ? std::string("infinite")
                                                       : std::to_string(m.diameter)) +
                              " outside 2..4: " + encode_graph6(g));
    a.diameter_in_2_4 = diam_ok;
    a.pass = a.pass && diam_ok;

    bool p4_ok = true;
    for (int v = 0; v < g.order(); ++v) {
        if (has_p4_subgraph(g.induced(g.row(v)))) {
            p4_ok = false;
            a.witnesses.push_back("neighborhood of vertex " + std::to_string(v) +
                                  " contains a P4: " + encode_graph6(g));
            break;
        }
    }
    a.p4_free_neighborhoods = p4_ok;
    a.pass = a.pass && p4_ok;

    if (m.min_degree == 2) {
        bool typed = true;
        for (int v = 0; v < g.order(); ++v) {
            if (g.degree(v) != 2) continue;
            if (!classify_degree2_vertex(g, v)) {
                typed = false;
                a.witnesses.push_back("degree-2 vertex " + std::to_string(v) +
                                      " fits no type: " + encode_graph6(g));
                break;
            }
        }
        a.degree2_types_total = typed;
        a.pass = a.pass && typed;
    }
}

inline void audit_k2t_connected(const Graph& g, int t, StructuralAudit& a) {
    bool total = true;
    for (const auto& cls : classify_kt_copies(g, t)) {
        if (cls.kind == KtKind::NONE) {
            total = false;
            std::string vs;
            for (int v : cls.clique) vs += (vs.empty() ? "" : ",") + std::to_string(v);
            a.witnesses.push_back("K_" + std::to_string(t) + " copy {" + vs +
                                  "} is neither type: " + encode_graph6(g));
            break;
        }
    }
    a.kt_classification_total = total;
    a.pass = a.pass && total;
}

} // namespace detail

// context hypotheses that are cheap to test (connectivity, order, t) raise
// precondition errors; saturation itself is the caller's responsibility
inline StructuralAudit structural_audit(const Graph& g, AuditContext ctx, int t = 0) {
    StructuralAudit a;
    switch (ctx) {
        case AuditContext::K33_CONNECTED:
            if (!is_connected(g)) throw precondition_error("audit context expects a connected graph");
            if (g.order() < 6) throw precondition_error("audit context expects order >= 6");
            detail::audit_k33_connected(g, a);
            break;
        case AuditContext::K2T_CONNECTED:
            if (t < 4) throw precondition_error("audit context expects t >= 4");
            if (!is_connected(g)) throw precondition_error("audit context expects a connected graph");
            if (g.order() < t + 2) throw precondition_error("audit context expects order >= t+2");
            detail::audit_k2t_connected(g, t, a);
            break;
        case AuditContext::K2T_DISCONNECTED:
            if (t < 4) throw precondition_error("audit context expects t >= 4");
            if (is_connected(g)) throw precondition_error("audit context expects a disconnected graph");
            detail::audit_decomposition(g, VirusPattern(2, t), a);
            break;
        case AuditContext::K33_DISCONNECTED:
            if (is_connected(g)) throw precondition_error("audit context expects a disconnected graph");
            detail::audit_decomposition(g, VirusPattern(3, 3), a);
            break;
    }
    return a;
}

} // namespace satlab
