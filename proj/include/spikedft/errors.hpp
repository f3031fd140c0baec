#pragma once

#include <stdexcept>
#include <string>

namespace spikedft {

/// Base class for every error the library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad inputs: out-of-range arguments, malformed files, broken invariants.
/// The CLI maps these to exit code 2.
struct ValidationError : Error {
    using Error::Error;
};

struct InvalidPhase : ValidationError {
    using ValidationError::ValidationError;
};

/// The angular gradient component carries a 1/r factor, undefined at r = 0.
struct SingularOrigin : ValidationError {
    using ValidationError::ValidationError;
};

/// Reconstruction of a spectrum whose inverse transform is not real.
struct ImaginaryResidual : ValidationError {
    using ValidationError::ValidationError;
};

struct LengthMismatch : ValidationError {
    using ValidationError::ValidationError;
};

struct InvalidDelay : ValidationError {
    using ValidationError::ValidationError;
};

struct ParseError : ValidationError {
    using ValidationError::ValidationError;
};

struct UnwritablePath : ValidationError {
    using ValidationError::ValidationError;
};

struct EmptyData : ValidationError {
    using ValidationError::ValidationError;
};

/// Delay-codec failures. The CLI maps these to exit code 3.
struct CodecError : Error {
    using Error::Error;
};

/// The spectrum carries no single-impulse delay to decode. Concrete cases:
/// an all-zero spectrum, or magnitudes that are not uniform (empty, full,
/// and multi-impulse patterns all land here).
struct NoDelayInformation : CodecError {
    using CodecError::CodecError;
};

struct ZeroSpectrum : NoDelayInformation {
    using NoDelayInformation::NoDelayInformation;
};

struct NonUniformMagnitude : NoDelayInformation {
    using NoDelayInformation::NoDelayInformation;
};

struct NonLinearPhase : CodecError {
    using CodecError::CodecError;
};

struct NonIntegerDelay : CodecError {
    using CodecError::CodecError;
};

} // namespace spikedft
