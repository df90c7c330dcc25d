#pragma once

#include <stdexcept>
#include <string>

namespace benford {

/// Argument outside an operation's admissible domain (non-positive input,
/// base <= 1, digit out of range, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// The requested computation would silently lose precision in double
/// arithmetic (e.g. |log_b x| too large to carry a fractional part).
struct PrecisionError : std::range_error {
    using std::range_error::range_error;
};

/// A stream or buffer was asked to grow beyond its declared capacity.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// Operation invoked on a generator family it is not defined for.
struct UnsupportedFamilyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Scenario document is malformed or violates an invariant.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem-level failure while emitting results.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace benford
