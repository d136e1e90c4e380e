#ifndef RACELINE_ERRORS_HPP
#define RACELINE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace raceline {

// Bad or inconsistent configuration files / options.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation outside the valid surface / model domain.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Kinematic or parameterization singularity (focal distance, degenerate J).
struct SingularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Newton solve for the algebraic state failed to converge.
struct AlgebraicSolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tire model invoked outside its validity range.
struct LowSpeedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raceline extraction refused (solution violates constraints).
struct ExtractionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace raceline

#endif  // RACELINE_ERRORS_HPP
