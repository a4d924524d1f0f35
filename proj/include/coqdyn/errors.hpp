#pragma once

#include <stdexcept>
#include <string>

namespace coqdyn {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element with |q̄q| below the null tolerance has no inverse.
struct NullCoquaternion : Error {
    using Error::Error;
};

/// The zero element has no polar decomposition.
struct ZeroCoquaternion : Error {
    using Error::Error;
};

/// Element on the light cone with no finite polar representation.
struct DegeneratePolar : Error {
    using Error::Error;
};

/// u2^2 = u4^2 + u5^2: the evolution generator is singular.
struct NullGenerator : Error {
    using Error::Error;
};

/// State with vanishing indefinite norm; Bloch vector undefined.
struct NullState : Error {
    using Error::Error;
};

/// An RHS was evaluated for parameters outside its regime.
struct RegimeMismatch : Error {
    using Error::Error;
};

/// An expectation value came out with a non-real component.
struct ImaginaryResidue : Error {
    using Error::Error;
};

/// Malformed run configuration or command-line input.
struct ConfigError : Error {
    using Error::Error;
};

} // namespace coqdyn
