#pragma once

#include <stdexcept>
#include <string>

namespace symsig {

/// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (cycle notation, group specs, surface specs, rationals).
struct ParseError : Error {
    using Error::Error;
};

/// A precondition violation: mismatched truncation orders, nonzero constant
/// term where one is required, out-of-range coefficient index, unbound
/// variable in a cycle-index evaluation, parity violations, and so on.
struct DomainError : Error {
    using Error::Error;
};

/// A configured resource cap was exceeded (group enumeration limit,
/// wreath-expansion term guard, homology basis cap).
struct SizeLimitError : Error {
    using Error::Error;
};

/// Floating-point residual above tolerance in the homology oracle.
struct NumericalError : Error {
    using Error::Error;
};

/// An exact computation produced a value the mathematics forbids
/// (e.g. a non-integer quotient signature). Always a bug, never user error.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace symsig
