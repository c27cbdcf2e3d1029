#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

/// Base class for every error raised by the series engine.
class SeriesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A term was placed at or above the precision bound of its series.
class PrecisionViolation : public SeriesError {
public:
    using SeriesError::SeriesError;
};

/// A coefficient was requested at an exponent the series does not know.
class InsufficientPrecision : public SeriesError {
public:
    using SeriesError::SeriesError;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public SeriesError {
public:
    using SeriesError::SeriesError;
};

/// Inversion of the zero series.
class NotInvertible : public SeriesError {
public:
    using SeriesError::SeriesError;
};

/// Inversion of a series whose leading coefficient is not +1 or -1.
class NonUnit : public SeriesError {
public:
    using SeriesError::SeriesError;
};

/// Two series have no exponent in common below their precision.
class VacuousComparison : public SeriesError {
public:
    using SeriesError::SeriesError;
};

/// An arithmetic fact that must hold by construction did not.
class InternalConsistencyError : public SeriesError {
public:
    using SeriesError::SeriesError;
};

} // namespace qseries
