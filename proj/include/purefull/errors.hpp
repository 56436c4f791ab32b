#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace purefull {

// Errors that mean the input asked for something mathematically invalid
// (non-closed form where a closed one is required, degenerate coframe, ...).
// The CLI maps these to exit code 1.
struct MathError : std::runtime_error {
    explicit MathError(const std::string& what, std::string detail_ = "")
        : std::runtime_error(what), detail(std::move(detail_)) {}
    std::string detail;
};

// Syntax / configuration problems; CLI exit code 2.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position_)
        : std::runtime_error(what + " (at position " + std::to_string(position_) + ")"),
          position(position_) {}
    std::size_t position;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace purefull
