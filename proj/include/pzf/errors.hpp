#pragma once

#include <stdexcept>
#include <string>

namespace pzf {

/// Malformed or semantically invalid input (edge lists, graph6, seed specs).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// An exact-engine size cap or a search budget was exceeded.
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Largest graph order accepted by the exact engines (state space is 2^n).
inline constexpr int exact_cap = 30;

}  // namespace pzf
