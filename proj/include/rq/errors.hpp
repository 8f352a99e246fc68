#pragma once

#include <stdexcept>
#include <string>

namespace rq {

// Malformed or inconsistent caller input (bad tables, parse errors,
// precondition violations). The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A computation that would exceed the configured size guards.
// The CLI maps this to exit code 1.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rq
