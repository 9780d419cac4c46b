#pragma once

#include <stdexcept>
#include <string>

namespace hue {

/// A computation contradicted one of the structural theorems the engine
/// verifies. This is a hard failure: it means either the input violates a
/// precondition in an undetected way or the implementation is wrong.
struct theorem_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured resource limit (for example the maximal module dimension)
/// was exceeded before starting the computation.
struct resource_guard_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hue
