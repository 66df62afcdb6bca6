#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "satlab/audit.hpp"
#include "satlab/classify.hpp"
#include "satlab/family.hpp"
#include "satlab/formulas.hpp"
#include "satlab/metrics.hpp"
#include "satlab/saturation.hpp"

namespace satlab {

// one verification task = one claimed statement checked against exhaustive
// search or construction output; ids are part of the CLI contract
inline const std::vector<std::string>& verify_task_ids() {
    static const std::vector<std::string> ids = {"T1_1", "T1_2", "T1_3", "T1_4", "T1_5",
                                                 "P2_1", "L2_3", "L2_5", "L2_6", "L3_1",
                                                 "OBS3", "T3_3", "CONJ1"};
    return ids;
}

struct VerifyOptions {
    std::string task;
    int n_lo = -1; // -1 keeps the task's default range
    int n_hi = -1;
    int t = 0;     // 0 keeps the task's default
    int limit = kDefaultEnumerationLimit;
    bool stable = false; // omit per-row timing
};

namespace detail {

struct ScanResult {
    SearchAccumulator all, connected;
    std::vector<Graph> saturated; // every saturated graph, enumeration order
};

// one enumeration pass of order n feeding every requested pattern at once
inline std::vector<ScanResult> scan_patterns(int n, const std::vector<VirusPattern>& ps,
                                             int limit) {
    std::vector<ScanResult> out(ps.size());
    enumerate_graphs(
        n, false,
        [&](const Graph& g) {
            bool conn = is_connected(g);
            int e = g.edge_count();
            std::string code;
            for (std::size_t i = 0; i < ps.size(); ++i) {
                ScanResult& r = out[i];
                bool sat = is_saturated_fast(g, ps[i]);
                ++r.all.scanned;
                if (conn) ++r.connected.scanned;
                if (!sat) continue;
                r.saturated.push_back(g);
                for (SearchAccumulator* acc : {&r.all, conn ? &r.connected : nullptr}) {
                    if (!acc) continue;
                    ++acc->saturated;
                    if (e > acc->best) continue;
                    if (e < acc->best) {
                        acc->best = e;
                        acc->extremal.clear();
                    }
                    if (code.empty()) code = canonical_graph6(g);
                    acc->extremal.insert(code);
                }
            }
        },
        limit);
    return out;
}

inline std::vector<std::string> extremal_list(const SearchAccumulator& acc) {
    return {acc.extremal.begin(), acc.extremal.end()};
}

inline nlohmann::ordered_json row_shell(const std::string& task, int n) {
    nlohmann::ordered_json row;
    row["schema"] = 1;
    row["task"] = "verify";
    row["theorem"] = task;
    row["n"] = n;
    return row;
}

inline void finish_row(nlohmann::ordered_json& row, bool pass, nlohmann::ordered_json detail) {
    row["status"] = pass ? "PASS" : "FAIL";
    row["detail"] = std::move(detail);
}

// EHM uniqueness sweep: every complete-pattern minimum matches the formula
// with the join construction as sole extremal graph
inline nlohmann::ordered_json verify_complete_sweep(int n, int limit) {
    auto row = row_shell("T1_1", n);
    std::vector<VirusPattern> ps;
    for (int alpha = 3; alpha <= n; ++alpha) ps.push_back(VirusPattern(0, alpha));
    auto scans = scan_patterns(n, ps, limit);
    bool pass = true;
    nlohmann::ordered_json detail = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < ps.size(); ++i) {
        int alpha = ps[i].t;
        long expected = sat_formula(FormulaFamily::SAT_COMPLETE, n, alpha).value;
        const SearchAccumulator& acc = scans[i].all;
        bool value_ok = acc.saturated > 0 && acc.best == expected;
        bool unique_ok = acc.extremal.size() == 1 &&
                         *acc.extremal.begin() == canonical_graph6(ehm_graph(n, alpha));
        pass = pass && value_ok && unique_ok;
        detail.push_back({{"alpha", alpha},
                          {"sat", acc.saturated > 0 ? nlohmann::ordered_json(acc.best)
                                                    : nlohmann::ordered_json(nullptr)},
                          {"expected", expected},
                          {"unique_ehm", unique_ok}});
    }
    finish_row(row, pass, std::move(detail));
    return row;
}

inline nlohmann::ordered_json verify_k24_minimum(int n, int limit) {
    auto row = row_shell("T1_2", n);
    auto scans = scan_patterns(n, {VirusPattern(2, 4)}, limit);
    const SearchAccumulator& acc = scans[0].all;
    long expected = sat_formula(FormulaFamily::SAT_K24, n).value;
    std::vector<std::string> family = k24_extremal_family(n);
    std::vector<std::string> found = extremal_list(acc);
    bool value_ok = acc.saturated > 0 && acc.best == expected;
    bool set_ok = found == family;
    nlohmann::ordered_json detail;
    detail["sat"] = acc.saturated > 0 ? nlohmann::ordered_json(acc.best)
                                      : nlohmann::ordered_json(nullptr);
    detail["expected"] = expected;
    detail["graphs_scanned"] = acc.scanned;
    detail["extremal_count"] = found.size();
    detail["family_count"] = family.size();
    detail["family_set_equal"] = set_ok;
    if (!set_ok) {
        detail["extremal"] = found;
        detail["family"] = family;
    }
    finish_row(row, value_ok && set_ok, std::move(detail));
    return row;
}

inline nlohmann::ordered_json verify_connected_two_leaf(int n, int t, int limit) {
    auto row = row_shell("T1_3", n);
    row["t"] = t;
    auto scans = scan_patterns(n, {VirusPattern(2, t)}, limit);
    const SearchAccumulator& acc = scans[0].connected;
    FormulaResult expected = sat_formula(FormulaFamily::CSAT_K2T, n, t);
    CsatFamilyId id = csat_extremal_family_id(n, t);
    std::vector<std::string> family = enumerate_family_members(id.base, t, n, true);
    std::vector<std::string> found = extremal_list(acc);
    bool value_ok = acc.saturated > 0 && acc.best == expected.value;
    bool set_ok = found == family;
    nlohmann::ordered_json detail;
    detail["csat"] = acc.saturated > 0 ? nlohmann::ordered_json(acc.best)
                                       : nlohmann::ordered_json(nullptr);
    detail["expected"] = expected.value;
    detail["branch"] = expected.branch;
    detail["family_base"] = id.base_name;
    detail["family_count"] = family.size();
    detail["family_set_equal"] = set_ok;
    if (!set_ok) {
        detail["extremal"] = found;
        detail["family"] = family;
    }
    finish_row(row, value_ok && set_ok, std::move(detail));
    return row;
}

inline nlohmann::ordered_json verify_construction(int n, int t) {
    auto row = row_shell("T1_4", n);
    row["t"] = t;
    Graph g = two_leaf_minimum_construction(n, t);
    FormulaResult expected = sat_formula(FormulaFamily::SAT_K2T, n, t);
    SaturationVerdict v = check_saturation(g, VirusPattern(2, t));
    bool edges_ok = g.edge_count() == expected.value;
    nlohmann::ordered_json detail;
    detail["edges"] = g.edge_count();
    detail["expected"] = expected.value;
    detail["branch"] = expected.branch;
    detail["saturated"] = v.is_saturated;
    finish_row(row, edges_ok && v.is_saturated, std::move(detail));
    return row;
}

inline nlohmann::ordered_json verify_k33_minimum(int n, int limit) {
    auto row = row_shell("T1_5", n);
    auto scans = scan_patterns(n, {VirusPattern(3, 3)}, limit);
    const SearchAccumulator& acc = scans[0].all;
    long expected = sat_formula(FormulaFamily::SAT_K33, n).value;
    bool value_ok = acc.saturated > 0 && acc.best == expected;
    bool shape_ok;
    nlohmann::ordered_json detail;
    detail["sat"] = acc.saturated > 0 ? nlohmann::ordered_json(acc.best)
                                      : nlohmann::ordered_json(nullptr);
    detail["expected"] = expected;
    if (n % 2 == 1) {
        std::string ehm = canonical_graph6(k33_extremal(n, K33Variant::ODD));
        shape_ok = acc.extremal.size() == 1 && *acc.extremal.begin() == ehm;
        detail["unique_matching_join"] = shape_ok;
    } else {
        std::string member = canonical_graph6(k33_extremal(n, K33Variant::EVEN));
        shape_ok = acc.extremal.count(member) > 0;
        detail["contains_even_construction"] = shape_ok;
        detail["extremal_count"] = acc.extremal.size();
    }
    finish_row(row, value_ok && shape_ok, std::move(detail));
    return row;
}

// audit helper: run fn over the saturated graphs that pass the filter,
// recording the first witness of failure
template <class Filter, class Check>
inline nlohmann::ordered_json audited_row(const std::string& task, int n,
                                          const std::vector<Graph>& saturated, Filter&& filter,
                                          Check&& check, int* t_field = nullptr) {
    auto row = row_shell(task, n);
    if (t_field) row["t"] = *t_field;
    long audited = 0;
    bool pass = true;
    std::vector<std::string> witnesses;
    for (const Graph& g : saturated) {
        if (!filter(g)) continue;
        ++audited;
        if (!check(g, witnesses)) pass = false;
    }
    nlohmann::ordered_json detail;
    detail["graphs_audited"] = audited;
    if (!witnesses.empty()) detail["witnesses"] = witnesses;
    finish_row(row, pass, std::move(detail));
    return row;
}

inline bool core_checks(const Graph& g, std::vector<std::string>& witnesses) {
    CoreResult cr = derive_core(g, 4);
    bool clique_free = true;
    enumerate_cliques(cr.core, 4, [&](const std::vector<int>&) {
        clique_free = false;
        return false;
    });
    long expected_edges = cr.core.edge_count() + 6L * cr.type1_count + 8L * cr.type2_count;
    int expected_removed = 3 * cr.type1_count + 4 * cr.type2_count;
    bool ok = cr.removed_sets_disjoint && is_connected(cr.core) && clique_free &&
              g.edge_count() == expected_edges && cr.removed_vertices == expected_removed;
    if (!ok) witnesses.push_back(encode_graph6(g));
    return ok;
}

} // namespace detail

// run one verification task; one JSON row per order (or per order/t pair)
inline std::vector<nlohmann::ordered_json> run_verify(const VerifyOptions& opt) {
    using detail::audited_row;
    using detail::scan_patterns;
    std::vector<nlohmann::ordered_json> raw_rows;
    // rows time themselves relative to the previous push; --stable drops this
    struct TimedRows {
        std::vector<nlohmann::ordered_json>& out;
        bool stable;
        std::chrono::steady_clock::time_point last = std::chrono::steady_clock::now();
        void push_back(nlohmann::ordered_json row) {
            auto now = std::chrono::steady_clock::now();
            if (!stable) row["elapsed_seconds"] = std::chrono::duration<double>(now - last).count();
            last = now;
            out.push_back(std::move(row));
        }
    } rows{raw_rows, opt.stable};
    auto range = [&](int lo, int hi) {
        std::pair<int, int> r{opt.n_lo < 0 ? lo : opt.n_lo, opt.n_hi < 0 ? hi : opt.n_hi};
        if (r.second < r.first) throw precondition_error("empty n range");
        return r;
    };

    if (opt.task == "T1_1") {
        auto [lo, hi] = range(3, 7);
        for (int n = lo; n <= hi; ++n)
            rows.push_back(detail::verify_complete_sweep(n, opt.limit));
    } else if (opt.task == "T1_2") {
        auto [lo, hi] = range(6, 8);
        for (int n = lo; n <= hi; ++n) rows.push_back(detail::verify_k24_minimum(n, opt.limit));
    } else if (opt.task == "T1_3") {
        int t = opt.t == 0 ? 5 : opt.t;
        auto [lo, hi] = range(t + 2, t + 4);
        for (int n = lo; n <= hi; ++n)
            rows.push_back(detail::verify_connected_two_leaf(n, t, opt.limit));
    } else if (opt.task == "T1_4") {
        std::vector<int> ts = opt.t == 0 ? std::vector<int>{5, 6, 7} : std::vector<int>{opt.t};
        for (int t : ts) {
            auto [lo, hi] = range(construction_min_order(t), construction_min_order(t) + 1);
            for (int n = lo; n <= hi; ++n) rows.push_back(detail::verify_construction(n, t));
        }
    } else if (opt.task == "T1_5") {
        auto [lo, hi] = range(7, 9);
        for (int n = lo; n <= hi; ++n) rows.push_back(detail::verify_k33_minimum(n, opt.limit));
    } else if (opt.task == "P2_1") {
        auto [lo, hi] = range(6, 8);
        for (int n = lo; n <= hi; ++n) {
            auto scans = scan_patterns(n, {VirusPattern(2, 4)}, opt.limit);
            rows.push_back(audited_row(
                "P2_1", n, scans[0].saturated, [](const Graph& g) { return is_connected(g); },
                [](const Graph& g, std::vector<std::string>& w) {
                    StructuralAudit a = structural_audit(g, AuditContext::K2T_CONNECTED, 4);
                    if (!a.pass) w.insert(w.end(), a.witnesses.begin(), a.witnesses.end());
                    return a.pass;
                }));
        }
    } else if (opt.task == "L2_3") {
        auto [lo, hi] = range(6, 8);
        for (int n = lo; n <= hi; ++n) {
            auto scans = scan_patterns(n, {VirusPattern(2, 4)}, opt.limit);
            rows.push_back(audited_row(
                "L2_3", n, scans[0].saturated, [](const Graph& g) { return is_connected(g); },
                detail::core_checks));
        }
    } else if (opt.task == "L2_5") {
        auto [lo24, hi24] = range(6, 8);
        for (int n = lo24; n <= hi24; ++n) {
            auto scans = scan_patterns(n, {VirusPattern(2, 4)}, opt.limit);
            int t = 4;
            rows.push_back(audited_row(
                "L2_5", n, scans[0].saturated, [](const Graph& g) { return is_connected(g); },
                [](const Graph& g, std::vector<std::string>& w) {
                    bool ok = role_avoiding_vertex(g, VirusPattern(1, 4), 3).has_value();
                    if (!ok) w.push_back(encode_graph6(g));
                    return ok;
                },
                &t));
        }
        auto [lo33, hi33] = range(7, 9);
        for (int n = lo33; n <= hi33; ++n) {
            auto scans = scan_patterns(n, {VirusPattern(3, 3)}, opt.limit);
            int t = 3;
            rows.push_back(audited_row(
                "L2_5", n, scans[0].saturated, [](const Graph& g) { return is_connected(g); },
                [](const Graph& g, std::vector<std::string>& w) {
                    bool ok = role_avoiding_vertex(g, VirusPattern(2, 3), 2).has_value();
                    if (!ok) w.push_back(encode_graph6(g));
                    return ok;
                },
                &t));
        }
    } else if (opt.task == "L2_6") {
        auto [lo24, hi24] = range(6, 8);
        for (int n = lo24; n <= hi24; ++n) {
            auto scans = scan_patterns(n, {VirusPattern(2, 4)}, opt.limit);
            int t = 4;
            rows.push_back(audited_row(
                "L2_6", n, scans[0].saturated, [](const Graph& g) { return !is_connected(g); },
                [](const Graph& g, std::vector<std::string>& w) {
                    StructuralAudit a = structural_audit(g, AuditContext::K2T_DISCONNECTED, 4);
                    if (!a.pass) w.insert(w.end(), a.witnesses.begin(), a.witnesses.end());
                    return a.pass;
                },
                &t));
        }
        auto [lo33, hi33] = range(7, 9);
        for (int n = lo33; n <= hi33; ++n) {
            auto scans = scan_patterns(n, {VirusPattern(3, 3)}, opt.limit);
            int t = 3;
            rows.push_back(audited_row(
                "L2_6", n, scans[0].saturated, [](const Graph& g) { return !is_connected(g); },
                [](const Graph& g, std::vector<std::string>& w) {
                    StructuralAudit a = structural_audit(g, AuditContext::K33_DISCONNECTED);
                    if (!a.pass) w.insert(w.end(), a.witnesses.begin(), a.witnesses.end());
                    return a.pass;
                },
                &t));
        }
    } else if (opt.task == "L3_1" || opt.task == "OBS3") {
        bool full = opt.task == "L3_1";
        auto [lo, hi] = range(7, 9);
        for (int n = lo; n <= hi; ++n) {
            auto scans = scan_patterns(n, {VirusPattern(3, 3)}, opt.limit);
            rows.push_back(audited_row(
                opt.task, n, scans[0].saturated,
                [](const Graph& g) { return is_connected(g); },
                [&](const Graph& g, std::vector<std::string>& w) {
                    StructuralAudit a = structural_audit(g, AuditContext::K33_CONNECTED);
                    bool ok = full ? a.pass : a.p4_free_neighborhoods.value_or(false);
                    if (!ok) w.insert(w.end(), a.witnesses.begin(), a.witnesses.end());
                    return ok;
                }));
        }
    } else if (opt.task == "T3_3") {
        auto [lo, hi] = range(7, 9);
        for (int n = lo; n <= hi; ++n) {
            auto scans = scan_patterns(n, {VirusPattern(3, 3)}, opt.limit);
            std::set<std::string> found;
            for (const Graph& g : scans[0].saturated)
                if (is_connected(g) && graph_metrics(g).min_degree == 1)
                    found.insert(canonical_graph6(g));
            std::set<std::string> expected;
            if (n % 3 == 2) expected.insert(canonical_graph6(k33_extremal(n, K33Variant::PENDANT)));
            auto row = detail::row_shell("T3_3", n);
            nlohmann::ordered_json detail_j;
            detail_j["min_degree_one_count"] = found.size();
            detail_j["expected_count"] = expected.size();
            detail::finish_row(row, found == expected, std::move(detail_j));
            rows.push_back(row);
        }
    } else if (opt.task == "CONJ1") {
        // exploratory only: report the minimum extremal set so it can be
        // compared against the conjectured single graph; never asserted
        auto [lo, hi] = range(8, 8);
        for (int n = lo; n <= hi; ++n) {
            SaturationReport rep = saturation_search(n, VirusPattern(3, 3), SearchMode::ALL, 1,
                                                     opt.limit);
            auto row = detail::row_shell("CONJ1", n);
            row["status"] = "REPORT_ONLY";
            nlohmann::ordered_json detail_j;
            detail_j["sat_value"] = rep.sat_value ? nlohmann::ordered_json(*rep.sat_value)
                                                  : nlohmann::ordered_json(nullptr);
            detail_j["extremal"] = rep.extremal;
            if (n >= 7) {
                std::string conjectured = canonical_graph6(
                    k33_extremal(n, n % 2 == 1 ? K33Variant::ODD : K33Variant::EVEN));
                detail_j["conjectured"] = conjectured;
                detail_j["matches_conjecture"] =
                    rep.extremal.size() == 1 && rep.extremal.front() == conjectured;
            }
            row["detail"] = std::move(detail_j);
            rows.push_back(row);
        }
    } else {
        throw precondition_error("unknown verification task \"" + opt.task + "\"");
    }
    return raw_rows;
}

inline bool all_rows_pass(const std::vector<nlohmann::ordered_json>& rows) {
    for (const auto& r : rows)
        if (r.at("status") == "FAIL") return false;
    return true;
}

} // namespace satlab
