#pragma once

#include <stdexcept>
#include <string>

namespace cyclodet {

// A denominator factor vanished before a terminating sum ran out, or a
// construction was requested at a pole of one of its coefficients.
struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Basic hypergeometric sum whose shape is not r = s+1.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Verification requested at parameters that violate a precondition of the
// identity; the check is refused rather than reported as false.
struct ApplicabilityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Kernel-shift step: the polynomial being divided out vanishes at the node.
struct ZeroAtNode : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Kernel-shift step: division by (x - a) left a nonzero remainder.
struct RemainderError : std::logic_error {
    using std::logic_error::logic_error;
};

// A counting formula's exact integer division failed to be exact.
struct IntegralityError : std::logic_error {
    using std::logic_error::logic_error;
};

// Quadrature did not stabilize within its refinement budget.
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejection sampling could not find admissible parameters.
struct SampleExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration was requested beyond its configured size cap.
struct BudgetError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Independent computations of the same quantity disagree.
struct MismatchError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace cyclodet
