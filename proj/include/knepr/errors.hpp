#pragma once

#include <stdexcept>
#include <string>

namespace knepr {

// Base class for physics-domain failures. Command-line / configuration
// problems use ConfigError (sweep.hpp) instead.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// M^2 < a^2 + Q^2: no horizon exists, the parameter set is rejected.
struct NakedSingularity : DomainError {
    using DomainError::DomainError;
};

// Evaluation at a point where Delta(r) vanishes within tolerance; the
// Boyer-Lindquist chart (metric inverse, tetrad) is undefined there.
struct HorizonSingular : DomainError {
    using DomainError::DomainError;
};

struct InsideHorizon : DomainError {
    using DomainError::DomainError;
};

struct Superluminal : DomainError {
    using DomainError::DomainError;
};

// Doran lapse field b = sqrt(2MR - Q^2)/Omega turns imaginary (2MR < Q^2).
struct ComplexLapse : DomainError {
    using DomainError::DomainError;
};

struct NonUnitDirection : DomainError {
    using DomainError::DomainError;
};

struct SingularMatrix : DomainError {
    using DomainError::DomainError;
};

}  // namespace knepr
