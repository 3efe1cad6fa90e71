#pragma once

#include <stdexcept>
#include <string>

namespace ordss {

// Arithmetic between elements of different prime fields.
struct FieldMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Inverse or division by the zero element.
struct ZeroDivisionError : std::domain_error {
    using std::domain_error::domain_error;
};

// Matrix/vector shapes do not line up, or an index is out of range.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A span/rank target cannot be reached (basis completion, decomposition,
// unsolvable linear system surfaced as an error rather than an empty result).
struct SpanError : std::domain_error {
    using std::domain_error::domain_error;
};

// Ring parameters that cannot carry the requested data or plan.
struct InfeasibleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A planner was asked to hit the optimal bandwidth on a scheme that does not
// satisfy the adjacency rank conditions.
struct NotOrdssError : std::domain_error {
    using std::domain_error::domain_error;
};

// Ill-formed event sequences fed to the ring simulator.
struct SimulationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ordss
