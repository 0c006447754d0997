#pragma once

#include <stdexcept>
#include <string>

namespace knlq {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Parameter validation
struct NonIntegerEll : Error { using Error::Error; };
struct EllOutOfRange : Error { using Error::Error; };
struct QBelowOne : Error { using Error::Error; };
struct NonPositiveDimension : Error { using Error::Error; };

// Order statistics
struct KOutOfRange : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };

// Geometry
struct DimensionMismatch : Error { using Error::Error; };
struct DeltaOutOfRange : Error { using Error::Error; };
struct InsufficientSamples : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };

// Orlicz machinery
struct OutOfRange : Error { using Error::Error; };
struct IntegrationFailure : Error { using Error::Error; };
struct NoFiniteBracket : Error { using Error::Error; };
struct UnboundedConjugate : Error { using Error::Error; };

// Predictors
struct QOutOfRegime : Error { using Error::Error; };
struct TBelowOne : Error { using Error::Error; };

// Experiments
struct ConfigInvalid : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct UnknownSuite : Error { using Error::Error; };

}  // namespace knlq
