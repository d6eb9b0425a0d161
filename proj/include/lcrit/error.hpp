#pragma once

#include <stdexcept>
#include <string>

namespace lcrit {

// Malformed or out-of-contract input. The CLI maps this to exit code 2.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A theorem hypothesis does not hold for the given data (e.g. the
// closed-form critical set was requested for an incompatible pair).
struct HypothesisError : std::domain_error {
    using std::domain_error::domain_error;
};

// Two independent computations disagree. Exit code 3.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace lcrit
