#pragma once

#include <stdexcept>
#include <string>

namespace ktorus {

// Bad user input or violated precondition (CLI maps this to exit code 2).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical gate failure that asks for a finer grid, not different input.
struct ResolutionError : InputError {
    using InputError::InputError;
};

}  // namespace ktorus
