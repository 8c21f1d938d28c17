#pragma once

#include <optional>

#include "lrq/errors.hpp"

// Kind of the lrq::Error thrown by f, or nullopt if none.
template <class F>
std::optional<lrq::ErrorKind> error_kind(F&& f) {
    try {
        f();
    } catch (const lrq::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}
