#ifndef QDL_ERRORS_HPP
#define QDL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qdl {

/// Base class of all qdl errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation.
struct domain_error : error {
    using error::error;
};

/// Adjunction/Riemann-Roch parity violated (half-integer result requested).
struct parity_error : error {
    using error::error;
};

/// A stated precondition does not hold.
struct precondition_error : error {
    using error::error;
};

/// A solver found no solution where one was requested.
struct no_solution_error : error {
    using error::error;
};

/// Exhaustive enumeration refused: input above the complexity cap.
struct complexity_guard_error : error {
    using error::error;
};

/// (d, g) lies outside regions A and B.
struct out_of_region_error : error {
    using error::error;
};

/// A bracketing search failed where the bracket is guaranteed in-region.
struct not_found_error : error {
    using error::error;
};

/// Degenerate polynomial input (zero polynomial where nonzero required).
struct degenerate_input_error : error {
    using error::error;
};

/// An identity that must hold by construction failed: arithmetic bug.
/// CLI maps this to exit code 2.
struct internal_invariant_error : error {
    using error::error;
};

} // namespace qdl

#endif
