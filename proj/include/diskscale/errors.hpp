#pragma once

#include <stdexcept>
#include <string>

namespace diskscale {

/// Malformed caller input: bad file contents, mismatched array lengths,
/// out-of-range parameters. Maps to CLI exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The fixed-radius part of a requested target graph disagrees with the
/// geometry, so no radius assignment can realise it.
struct UnscaledMismatchError : InputError {
    using InputError::InputError;
};

/// Floating-point trouble inside the LP: a reported optimum failed its own
/// feasibility re-check. Deterministic for a given input.
struct IllConditionedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The exhaustive reference solver refuses inputs beyond its configured size.
struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Cooperative deadline reached inside a solver.
struct TimeoutError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace diskscale
