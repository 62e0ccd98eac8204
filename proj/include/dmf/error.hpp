#pragma once

#include <stdexcept>
#include <string>

namespace dmf {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Series inversion requested for a series with vanishing constant term.
struct NonUnitSeries : Error {
    using Error::Error;
};

// Composition f(s) with s(0) != 0.
struct CompositionNotSupported : Error {
    using Error::Error;
};

// n-th root with gcd(n, p) != 1 or constant term != 1.
struct RootObstruction : Error {
    using Error::Error;
};

// Reduction mod pi of a coefficient with negative pi-adic valuation.
struct NotPiIntegral : Error {
    using Error::Error;
};

// Weight not divisible by q-1 where an Eisenstein/zeta construction needs it.
struct NotEvenWeight : Error {
    using Error::Error;
};

// A series that should be a level-1 modular form is not in the span of the
// isobaric monomial basis (or the available precision is too low to decide).
struct NotInSpan : Error {
    using Error::Error;
};

// Atkin-Lehner action on an odd-weight atom (pi^{k/2} undefined here).
struct OddWeightUnsupported : Error {
    using Error::Error;
};

// proof_trace called with Theta f !== g (mod pi).
struct PremiseViolated : Error {
    using Error::Error;
};

// An operation was handed inputs with insufficient stated precision.
struct PrecisionError : Error {
    using Error::Error;
};

// Malformed text form (polynomial, rational, form expression).
struct ParseError : Error {
    using Error::Error;
};

// Invalid runtime configuration (bad field parameters, reducible pi, ...).
struct ConfigError : Error {
    using Error::Error;
};

// A SeriesForm constructor argument violates the weight/type/support rules.
struct InvalidForm : Error {
    using Error::Error;
};

}  // namespace dmf
