#pragma once

#include <stdexcept>
#include <string>

namespace zsdiv {

// Input violates a documented precondition (bad modulus, wrong field, ...).
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input is well-formed but exceeds a configured resource bound.  The message
// names the bound that was hit.
struct capability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A floating-point evaluation drifted past the accepted residual.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cross-check between two routes disagreed; indicates a bug, not bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace zsdiv
