#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <limits>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "satlab/canonical.hpp"
#include "satlab/enumerate.hpp"
#include "satlab/metrics.hpp"
#include "satlab/virus.hpp"

namespace satlab {

// a graph below the pattern order is never considered saturated, even when
// it is free and has no completable non-edge (e.g. a complete graph)
struct SaturationVerdict {
    bool below_order = false;
    bool is_free = false;
    int completing_nonedges = 0;
    int total_nonedges = 0;
    bool is_saturated = false;
};

namespace detail {

// does g+uv contain the pattern? sound seeded form for pattern-free g:
// any copy must use the new edge, so its clique meets {u, v}
inline bool completes_nonedge(const Graph& g, int u, int v, VirusPattern p) {
    Graph h = g;
    h.add_edge(u, v);
    bool found = false;
    auto probe = [&](int anchor, std::uint64_t extra_excluded) {
        std::vector<int> chosen{anchor};
        std::uint64_t cand = h.row(anchor) & ~extra_excluded;
        cliques_rec(h, p.t, chosen, cand, [&](const std::vector<int>& clique) {
            std::uint64_t cmask = mask_of(clique);
            if (matchable(h, clique, h.vertex_mask() & ~cmask, p.s)) { found = true; return false; }
            return true;
        });
    };
    probe(u, 0);
    if (!found) probe(v, std::uint64_t{1} << u); // cliques with v but not u
    return found;
}

} // namespace detail

// early-exit saturation predicate used by exhaustive scans
inline bool is_saturated_fast(const Graph& g, VirusPattern p, bool require_connected = false) {
    if (g.order() < p.order()) return false;
    if (require_connected && !is_connected(g)) return false;
    if (contains_virus(g, p)) return false;
    for (int u = 0; u < g.order(); ++u) {
        std::uint64_t missing = ~g.row(u) & g.vertex_mask() & ~((std::uint64_t{2} << u) - 1);
        while (missing) {
            int v = std::countr_zero(missing);
            missing &= missing - 1;
            if (!detail::completes_nonedge(g, u, v, p)) return false;
        }
    }
    return true;
}

inline SaturationVerdict check_saturation(const Graph& g, VirusPattern p, bool require_connected = false) {
    SaturationVerdict v;
    v.below_order = g.order() < p.order();
    v.is_free = is_virus_free(g, p);
    v.total_nonedges = g.order() * (g.order() - 1) / 2 - g.edge_count();
    if (!v.is_free) {
        // a copy already sits in g, so every supergraph contains one
        v.completing_nonedges = v.total_nonedges;
    } else {
        for (auto [a, b] : g.non_edges())
            if (detail::completes_nonedge(g, a, b, p)) ++v.completing_nonedges;
    }
    v.is_saturated = !v.below_order && v.is_free && v.completing_nonedges == v.total_nonedges &&
                     (!require_connected || is_connected(g));
    return v;
}

enum class SearchMode { ALL, CONNECTED };

inline std::string to_string(SearchMode m) { return m == SearchMode::ALL ? "all" : "connected"; }

struct SaturationReport {
    int n = 0;
    VirusPattern pattern{0, 3};
    SearchMode mode = SearchMode::ALL;
    std::optional<int> sat_value;          // empty means NONE_FOUND
    std::vector<std::string> extremal;     // canonical graph6, sorted, distinct
    long graphs_scanned = 0;
    long saturated_count = 0;
    double elapsed_seconds = 0;            // excluded from stable output
};

namespace detail {

struct SearchAccumulator {
    long scanned = 0;
    long saturated = 0;
    int best = std::numeric_limits<int>::max();
    std::set<std::string> extremal;

    void consider(const Graph& g, VirusPattern p, SearchMode mode) {
        if (mode == SearchMode::CONNECTED && !is_connected(g)) return;
        ++scanned;
        if (!is_saturated_fast(g, p)) return;
        ++saturated;
        int e = g.edge_count();
        if (e > best) return;
        if (e < best) {
            best = e;
            extremal.clear();
        }
        extremal.insert(canonical_graph6(g));
    }

    void merge(SearchAccumulator&& other) {
        scanned += other.scanned;
        saturated += other.saturated;
        if (other.best < best) {
            best = other.best;
            extremal = std::move(other.extremal);
        } else if (other.best == best) {
            extremal.merge(other.extremal);
        }
    }
};

template <class Produce>
SearchAccumulator scan_graphs(Produce&& produce, VirusPattern p, SearchMode mode, int jobs) {
    SearchAccumulator total;
    if (jobs <= 1) {
        produce([&](const Graph& g) { total.consider(g, p, mode); });
        return total;
    }
    std::mutex mu;
    std::condition_variable cv_space, cv_data;
    std::deque<std::vector<Graph>> queue;
    bool done = false;
    const std::size_t kBatch = 128, kQueueCap = 16;
    std::exception_ptr producer_error;

    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            SearchAccumulator local;
            for (;;) {
                std::vector<Graph> batch;
                {
                    std::unique_lock<std::mutex> lk(mu);
                    cv_data.wait(lk, [&] { return done || !queue.empty(); });
                    if (queue.empty()) break;
                    batch = std::move(queue.front());
                    queue.pop_front();
                }
                cv_space.notify_one();
                for (const Graph& g : batch) local.consider(g, p, mode);
            }
            std::lock_guard<std::mutex> lk(mu);
            total.merge(std::move(local));
        });
    }

    {
        std::vector<Graph> batch;
        batch.reserve(kBatch);
        auto flush = [&] {
            std::unique_lock<std::mutex> lk(mu);
            cv_space.wait(lk, [&] { return queue.size() < kQueueCap; });
            queue.push_back(std::move(batch));
            batch = {};
            batch.reserve(kBatch);
            cv_data.notify_one();
        };
        try {
            produce([&](const Graph& g) {
                batch.push_back(g);
                if (batch.size() >= kBatch) flush();
            });
            if (!batch.empty()) flush();
        } catch (...) {
            producer_error = std::current_exception();
        }
        {
            std::lock_guard<std::mutex> lk(mu);
            done = true;
        }
        cv_data.notify_all();
    }
    for (auto& t : workers) t.join();
    if (producer_error) std::rethrow_exception(producer_error);
    return total;
}

inline SaturationReport report_from(SearchAccumulator&& acc, int n, VirusPattern p, SearchMode mode,
                                    std::chrono::steady_clock::time_point t0) {
    SaturationReport rep;
    rep.n = n;
    rep.pattern = p;
    rep.mode = mode;
    rep.graphs_scanned = acc.scanned;
    rep.saturated_count = acc.saturated;
    if (acc.saturated > 0) {
        rep.sat_value = acc.best;
        rep.extremal.assign(acc.extremal.begin(), acc.extremal.end());
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace detail

// exhaustive minimum search over all isomorphism classes of order n; the
// report is byte-stable across runs and independent of the worker count
inline SaturationReport saturation_search(int n, VirusPattern p, SearchMode mode, int jobs = 1,
                                          int limit = kDefaultEnumerationLimit) {
    auto t0 = std::chrono::steady_clock::now();
    if (n > std::min(limit, kEnumerationCeiling)) // fail before spawning workers
        enumerate_graphs(n, false, [](const Graph&) {}, limit);
    auto acc = detail::scan_graphs(
        [&](const std::function<void(const Graph&)>& sink) { enumerate_graphs(n, false, sink, limit); },
        p, mode, jobs);
    return detail::report_from(std::move(acc), n, p, mode, t0);
}

// same search over a caller-supplied stream of graphs (one per class)
inline SaturationReport saturation_search_stream(const std::vector<Graph>& graphs, int n,
                                                 VirusPattern p, SearchMode mode, int jobs = 1) {
    auto t0 = std::chrono::steady_clock::now();
    auto acc = detail::scan_graphs(
        [&](const std::function<void(const Graph&)>& sink) {
            for (const Graph& g : graphs) sink(g);
        },
        p, mode, jobs);
    return detail::report_from(std::move(acc), n, p, mode, t0);
}

// all saturated graphs of order n (every edge count), deterministic order
inline std::vector<Graph> all_saturated_graphs(int n, VirusPattern p, SearchMode mode,
                                               int limit = kDefaultEnumerationLimit) {
    std::vector<Graph> out;
    enumerate_graphs(
        n, mode == SearchMode::CONNECTED,
        [&](const Graph& g) {
            if (is_saturated_fast(g, p)) out.push_back(g);
        },
        limit);
    return out;
}

} // namespace satlab
