#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "satlab/errors.hpp"

namespace satlab {

// runtime limits; precedence: command-line flags, then SATLAB_* environment
// variables, then a key=value config file, then these defaults
struct Config {
    int max_n = 9;
    int jobs = 1;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline int parse_positive_int(const std::string& text, const std::string& what) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(text, &pos);
    } catch (const std::exception&) {
        throw parse_error(what + " must be a positive integer, got \"" + text + "\"", 0);
    }
    if (pos != text.size() || value <= 0)
        throw parse_error(what + " must be a positive integer, got \"" + text + "\"", 0);
    return value;
}

} // namespace detail

// key=value lines, # comments; unknown keys are rejected so typos surface
inline void load_config_file(Config& cfg, const std::string& path, bool must_exist) {
    std::ifstream in(path);
    if (!in) {
        if (must_exist) throw parse_error("cannot open config file " + path, 0);
        return;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = detail::trim(line.substr(0, line.find('#')));
        if (body.empty()) continue;
        std::size_t eq = body.find('=');
        if (eq == std::string::npos)
            throw parse_error(path + ":" + std::to_string(lineno) + ": expected key=value", 0);
        std::string key = detail::trim(body.substr(0, eq));
        std::string value = detail::trim(body.substr(eq + 1));
        if (key == "max_n") cfg.max_n = detail::parse_positive_int(value, "max_n");
        else if (key == "jobs") cfg.jobs = detail::parse_positive_int(value, "jobs");
        else
            throw parse_error(path + ":" + std::to_string(lineno) + ": unknown key \"" + key + "\"",
                              0);
    }
}

inline void load_config_env(Config& cfg) {
    if (const char* v = std::getenv("SATLAB_MAX_N"))
        cfg.max_n = detail::parse_positive_int(v, "SATLAB_MAX_N");
    if (const char* v = std::getenv("SATLAB_JOBS"))
        cfg.jobs = detail::parse_positive_int(v, "SATLAB_JOBS");
}

// defaults, then satlab.toml beside the invocation if present (or an explicit
// file, which must exist), then the environment
inline Config load_config(const std::string& explicit_file = "") {
    Config cfg;
    if (!explicit_file.empty()) load_config_file(cfg, explicit_file, true);
    else load_config_file(cfg, "satlab.toml", false);
    load_config_env(cfg);
    return cfg;
}

} // namespace satlab
