#pragma once

#include <stdexcept>
#include <string>

namespace clustersim {

// Error taxonomy mirrored by the CLI exit codes: config errors exit 1,
// numerical failures exit 2, I/O failures exit 3.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitian : NumericalError {
    using NumericalError::NumericalError;
};
struct NegativeSpectrum : NumericalError {
    using NumericalError::NumericalError;
};
struct DimensionMismatch : NumericalError {
    using NumericalError::NumericalError;
};
struct FluxOutOfRange : NumericalError {
    using NumericalError::NumericalError;
};
struct NoBracket : NumericalError {
    using NumericalError::NumericalError;
};
struct InconsistentTuning : NumericalError {
    using NumericalError::NumericalError;
};
struct SiteOutOfRange : NumericalError {
    using NumericalError::NumericalError;
};
struct NotAtDegeneracy : NumericalError {
    using NumericalError::NumericalError;
};
struct NotProportionalToIdentity : NumericalError {
    using NumericalError::NumericalError;
};
struct UnphysicalRates : NumericalError {
    using NumericalError::NumericalError;
};
struct StepTooLarge : NumericalError {
    using NumericalError::NumericalError;
};
struct NoPeaks : NumericalError {
    using NumericalError::NumericalError;
};
struct TargetUnreachable : NumericalError {
    using NumericalError::NumericalError;
};

struct UnknownKey : ConfigError {
    using ConfigError::ConfigError;
};
struct MalformedValue : ConfigError {
    using ConfigError::ConfigError;
};

}  // namespace clustersim
