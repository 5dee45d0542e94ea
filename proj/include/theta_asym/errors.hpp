#pragma once

#include <stdexcept>
#include <string>

namespace theta_asym {

// Thrown when a series/product truncation budget is exhausted before the
// requested relative error is reached.
struct NonConvergent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the domain of the operation (Im tau <= 0, z outside (0,1), ...).
struct InvalidPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter combination outside the admissible family.
struct InvalidSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation requested too close to a pole of the quotient.
struct PoleProximity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A candidate pole where the denominator zero is not simple (or absent).
struct DegeneratePole : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureDivergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Contour plan whose deleted windows collide or leave the unit interval.
struct PolePlanInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Growth-window condition 0 < growth_base < sqrt(lambda2) violated.
struct WindowViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A plain complex result was requested but does not fit in double range.
struct ScaleExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Asymptotic form requested outside its sector of validity.
struct ArgOutOfSector : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace theta_asym
