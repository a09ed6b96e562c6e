// errors.hpp — Exception hierarchy shared by all qme components

#pragma once

#include <stdexcept>
#include <string>

namespace qme {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed inputs: dimension mismatches, non-square data, invalid frames.
struct StructuralError : Error {
    using Error::Error;
};

// Inputs outside the supported generator form (e.g. non-traceless jumps).
struct UnsupportedFormError : Error {
    using Error::Error;
};

// Coupling schedule could not be parsed or evaluated to a finite value.
struct ScheduleError : Error {
    using Error::Error;
};

// Step controller or quadrature failed to reach the requested tolerance.
struct IntegrationError : Error {
    using Error::Error;
};

// A spectrum method was invoked on a spec it does not apply to.
struct WrongMethodError : Error {
    using Error::Error;
};

// Gram accumulation lost rank; carries a suggested re-orthonormalization interval.
struct ConditioningError : Error {
    ConditioningError(const std::string& what, double suggested)
        : Error(what), suggested_interval(suggested) {}
    double suggested_interval;
};

// Two supposedly equivalent internal routes disagreed beyond tolerance.
struct ConsistencyError : Error {
    using Error::Error;
};

} // namespace qme
