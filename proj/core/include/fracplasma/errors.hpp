#ifndef FRACPLASMA_ERRORS_HPP
#define FRACPLASMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fracplasma {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the supported domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Gamma function evaluated at a non-positive integer.
struct PoleError : Error {
    using Error::Error;
};

// Series summation exhausted max_terms before reaching tolerance.
struct ConvergenceError : Error {
    using Error::Error;
};

// Adaptive quadrature failed to reach the requested tolerance.
struct QuadratureError : Error {
    using Error::Error;
};

// Resonant denominator |k|^alpha v_x - omega below threshold.
struct ResonanceError : Error {
    using Error::Error;
};

// DispersionCase parameter constraints violated.
struct CaseInvariantError : Error {
    using Error::Error;
};

// Power-law symbol exponents outside the solvability window.
struct SolvabilityError : Error {
    using Error::Error;
};

// Half-period contributions of an oscillatory integral fail to decay.
struct TailDivergenceError : Error {
    using Error::Error;
};

// Half-period budget exhausted before the tail settled.
struct MaxPeriodsError : Error {
    using Error::Error;
};

} // namespace fracplasma

#endif
