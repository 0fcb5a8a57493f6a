#pragma once

#include <stdexcept>
#include <string>

namespace qhom {

// Error taxonomy mirrors the CLI exit-code contract:
//   InputError -> 1, LimitError -> 2, InvariantError -> 3.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured cap or search budget was exhausted before a definite answer.
struct LimitError : std::runtime_error {
    explicit LimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal assertion failed; results cannot be trusted.
struct InvariantError : std::logic_error {
    explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

inline void check(bool cond, const std::string& msg) {
    if (!cond)
        throw InvariantError(msg);
}

}  // namespace qhom
