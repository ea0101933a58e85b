#pragma once

#include <stdexcept>
#include <string>

namespace gwql {

/// Base class for all gwql errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid argument to an operation (bad genus, out-of-range index, ...).
struct InvalidInput : Error {
    using Error::Error;
};

/// Division by zero in exact arithmetic, or inverting a series with zero
/// leading coefficient.
struct DivisionByZero : Error {
    using Error::Error;
};

/// A torus weight draw turned out non-generic (a denominator vanished).
/// The engine regenerates weights and retries.
struct NonGenericWeights : Error {
    using Error::Error;
};

/// Cache conflict: two different values written under the same canonical key.
struct CacheConflict : Error {
    using Error::Error;
};

}  // namespace gwql
