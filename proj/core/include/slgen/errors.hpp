// errors.hpp — exception hierarchy shared by all slgen components
#pragma once

#include <stdexcept>
#include <string>

namespace slgen {

// Every library failure derives from Error so a caller can map the whole
// hierarchy to an exit code in one catch.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid input: bad parameters, malformed configs, inconsistent spaces.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Numerical failure at run time: quadrature budget exhausted, step-size
// underflow, monitor breach, degenerate kernels.
class NumericalError : public Error {
public:
    using Error::Error;
};

struct DimensionCapError : ValidationError { using ValidationError::ValidationError; };
struct SiteMismatchError : ValidationError { using ValidationError::ValidationError; };
struct SpaceMismatchError : ValidationError { using ValidationError::ValidationError; };
struct ParamMismatchError : ValidationError { using ValidationError::ValidationError; };
struct ParamInvariantViolation : ValidationError { using ValidationError::ValidationError; };
struct ResonanceViolation : ValidationError { using ValidationError::ValidationError; };
struct PictureMismatchError : ValidationError { using ValidationError::ValidationError; };
struct DegeneratePumpError : ValidationError { using ValidationError::ValidationError; };
struct BandTooNarrowError : ValidationError { using ValidationError::ValidationError; };
struct OrderViolationError : ValidationError { using ValidationError::ValidationError; };
struct ConfigParseError : ValidationError { using ValidationError::ValidationError; };

struct QuadratureDivergence : NumericalError { using NumericalError::NumericalError; };
struct DecompositionFailure : NumericalError { using NumericalError::NumericalError; };
struct StepSizeUnderflow : NumericalError { using NumericalError::NumericalError; };
struct MonitorBreach : NumericalError { using NumericalError::NumericalError; };
struct DegenerateKernelError : NumericalError { using NumericalError::NumericalError; };

} // namespace slgen
