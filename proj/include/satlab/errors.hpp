#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace satlab {

// raised when an argument violates a documented precondition
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// raised when a request exceeds a hard or configured size limit
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// raised on malformed external input; offset is the byte where parsing failed
struct parse_error : std::runtime_error {
    std::size_t offset;
    parse_error(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// raised when an attachment description violates a family membership rule;
// constraint is the rule number (1..3), or 0 for shape errors
struct validation_error : std::invalid_argument {
    int constraint;
    validation_error(const std::string& what, int rule)
        : std::invalid_argument(what), constraint(rule) {}
};

// raised when a derivation that must be exact comes out non-integral;
// indicates an internal inconsistency, never expected to fire
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace satlab
