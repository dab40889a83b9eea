#pragma once

#include <stdexcept>
#include <string>

namespace rffrc {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad experiment config: malformed JSON, unknown keys, invalid values.
struct ConfigError : Error {
    using Error::Error;
};

/// Shapes of two operands disagree (vector length, matrix dims, lag order).
struct DimensionError : Error {
    using Error::Error;
};

/// A numeric parameter is outside its admissible range.
struct InvalidParameterError : Error {
    using Error::Error;
};

/// A series is too short for the requested lag order.
struct InsufficientLengthError : Error {
    using Error::Error;
};

/// The Rulkov denominator 1 - x came within tolerance of zero.
struct SingularityError : Error {
    using Error::Error;
};

/// A simulated or predicted state stopped being finite.
struct NonFiniteError : Error {
    using Error::Error;
};

/// max(y) == min(y): the NRMSE denominator is zero.
struct DegenerateRangeError : Error {
    using Error::Error;
};

/// Factorization failed or the solve did not meet its residual bound.
struct NumericalError : Error {
    using Error::Error;
};

/// Model file is corrupt or has an unsupported format version.
struct FormatError : Error {
    using Error::Error;
};

}  // namespace rffrc
