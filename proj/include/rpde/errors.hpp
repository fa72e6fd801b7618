#pragma once

#include <stdexcept>
#include <string>

namespace rpde {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid input to a rigorous operation (division by an interval containing
// zero, sqrt of a negative interval, endpoint overflow, ...).
struct DomainError : Error {
    using Error::Error;
};

// Mismatched sequence spaces / weights, or a request for an operator norm
// that is infinite in the declared weights.
struct SpaceError : Error {
    using Error::Error;
};

// Symmetry flag incompatible with the requested problem kind.
struct SymmetryError : Error {
    using Error::Error;
};

// Neumann-series argument alpha >= 1: invertibility cannot be certified.
struct NotContractingError : Error {
    using Error::Error;
};

// A fixed-point theorem hypothesis failed; `label` names the first violated
// condition ("a".."e" for the Kantorovich-style check).
struct VerificationFailed : Error {
    std::string label;
    VerificationFailed(const std::string& msg, std::string lbl = "")
        : Error(msg), label(std::move(lbl)) {}
};

// No sign change found for the radii polynomial: the negativity interval
// may be empty.
struct EmptyIntervalError : Error {
    using Error::Error;
};

// Galerkin derivative singular, or a preconditioner could not be built.
struct PreconditionError : Error {
    using Error::Error;
};

// A diagonal tail entry of a preconditioner encloses zero.
struct ResonantTailError : Error {
    using Error::Error;
};

// Jet solvability margin 1 - alpha_n <= 0 at some Taylor order. Carries no
// claim that a resonance actually occurs.
struct ResonanceSuspectedError : Error {
    int order;
    ResonanceSuspectedError(const std::string& msg, int n) : Error(msg), order(n) {}
};

// Non-rigorous frontend failed to produce a usable candidate.
struct ApproximationFailed : Error {
    using Error::Error;
};

// Malformed configuration / certificate / sequence file.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace rpde
