#pragma once

#include <string>

#include <json.hpp>

#include "satlab/saturation.hpp"

namespace satlab {

// single-line JSON with a stable key order; stable=true omits timing so the
// output is byte-reproducible
inline nlohmann::ordered_json report_json(const SaturationReport& r, bool stable) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["task"] = "search";
    j["n"] = r.n;
    j["pattern"] = {{"s", r.pattern.s}, {"t", r.pattern.t}};
    j["mode"] = to_string(r.mode);
    j["graphs_scanned"] = r.graphs_scanned;
    j["saturated_count"] = r.saturated_count;
    if (r.sat_value) j["sat_value"] = *r.sat_value;
    else j["sat_value"] = nullptr;
    j["extremal"] = r.extremal;
    if (!stable) j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

inline std::string report_line(const SaturationReport& r, bool stable) {
    return report_json(r, stable).dump() + "\n";
}

} // namespace satlab
