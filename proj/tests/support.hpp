#pragma once

#include <optional>

#include "awfslab/error.hpp"

namespace awfslab::test {

/// The kind of the Error raised by `f`, or nullopt if it returns normally.
template <class F>
std::optional<ErrorKind> raised(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

}  // namespace awfslab::test
