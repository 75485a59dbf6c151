#ifndef LATMESH_ERRORS_HPP
#define LATMESH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latmesh {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input failed validation (bad pair, bad argument, schema mismatch).
struct ValidationError : Error {
    using Error::Error;
};

// zeta called with a ball containing s = 1.
struct PoleError : Error {
    using Error::Error;
};

// Target could not be certified even at the precision cap.
struct PrecisionExhausted : Error {
    using Error::Error;
};

struct AmbiguousFloor : PrecisionExhausted {
    using PrecisionExhausted::PrecisionExhausted;
};

struct AmbiguousBoundary : PrecisionExhausted {
    using PrecisionExhausted::PrecisionExhausted;
};

struct AmbiguousOrder : PrecisionExhausted {
    using PrecisionExhausted::PrecisionExhausted;
};

struct AmbiguousTie : PrecisionExhausted {
    using PrecisionExhausted::PrecisionExhausted;
};

// A resource guard refused the request. `guard` names the guard for reports.
struct GuardViolation : Error {
    std::string guard;
    GuardViolation(std::string guard_name, const std::string& what)
        : Error(guard_name + ": " + what), guard(std::move(guard_name)) {}
};

// Closed-form G_{a,b} requested before its validation suite passed.
struct GabNotValidated : ValidationError {
    using ValidationError::ValidationError;
};

} // namespace latmesh

#endif
