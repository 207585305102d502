#pragma once

#include <stdexcept>

namespace denskit {

/// Base class of every toolkit failure. The CLI maps these to exit code 1,
/// except the two flag-level grid errors below which map to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested domain has zero or negative width (hi <= lo).
class DomainEmptyError : public Error {
public:
    using Error::Error;
};

/// Grid resolution below the supported minimum (m < 16 intervals).
class ResolutionError : public Error {
public:
    using Error::Error;
};

/// Sample has no usable dispersion (all values identical, or s and IQR both zero).
class DegenerateDataError : public Error {
public:
    using Error::Error;
};

/// One or more sample values fall outside the binning domain.
class OutOfDomainError : public Error {
public:
    using Error::Error;
};

/// Two grid-aligned objects do not share the same grid.
class GridMismatchError : public Error {
public:
    using Error::Error;
};

/// Density carries no mass (integral below threshold); CDF undefined.
class ZeroMassError : public Error {
public:
    using Error::Error;
};

/// The linear solve broke down or produced non-physical output. Assert-level:
/// cannot occur for valid inputs (dt > 0, pilot > 0).
class SolverError : public Error {
public:
    using Error::Error;
};

/// File could not be opened or read.
class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed input file; message carries the offending row number.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A dataset or filter result is empty.
class EmptyResultError : public Error {
public:
    using Error::Error;
};

/// Masking found no grid cell where both data kinds are available.
class EmptyIntersectionError : public Error {
public:
    using Error::Error;
};

/// Fewer data points than the operation requires (estimators need n >= 2).
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

}  // namespace denskit
