#ifndef PEAKON_ERRORS_HPP
#define PEAKON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace peakon {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input is outside the ordered domain q1 > q2 > ... > qn, or non-finite.
struct OutOfDomainError : Error {
    using Error::Error;
};

// Operation requires a specific peakon count n.
struct WrongArityError : Error {
    using Error::Error;
};

// Metric inverse failed its residual check (point too close to the
// coincidence set for the arithmetic precision).
struct SingularMatrixError : Error {
    using Error::Error;
};

// Predicate undefined because some momentum is exactly zero.
struct OnBoundaryError : Error {
    using Error::Error;
};

// Collision-time bound requested for a state that does not collide.
struct NotCollidingError : Error {
    using Error::Error;
};

// Scale-degenerate input (e.g. vanishing 2H1 - H0^2).
struct DegenerateError : Error {
    using Error::Error;
};

// Plane spanning vectors are (numerically) linearly dependent.
struct DegeneratePlaneError : Error {
    using Error::Error;
};

struct NotPositiveDefiniteError : Error {
    using Error::Error;
};

// Finite-difference step too large for the gaps at the evaluation point.
struct StepTooLargeError : Error {
    using Error::Error;
};

// Coordinates so large that exponentials would overflow.
struct OverflowError : Error {
    using Error::Error;
};

} // namespace peakon

#endif
