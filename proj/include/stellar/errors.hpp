#pragma once

#include <stdexcept>
#include <string>

namespace stellar {

/// Raised on malformed or rejected input (bad files, illegal moves,
/// violated operation preconditions). CLI maps this to exit code 1.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal invariant fails. Always a bug; CLI maps
/// this to exit code 2.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw input_error(what);
}

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw internal_error(what);
}

} // namespace stellar
