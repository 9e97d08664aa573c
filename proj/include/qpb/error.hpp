#pragma once

#include <stdexcept>
#include <string>

namespace qpb {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an operation receives a form of the wrong degree,
/// a corepresentation mismatch, or a similar structural misuse.
struct DomainError : Error {
    using Error::Error;
};

/// Raised when a numeric value cannot be represented or recovered
/// exactly (failed rational snap, non-invertible element, ...).
struct NumericError : Error {
    using Error::Error;
};

/// Raised when parsing textual input (scalars, CLI payloads) fails.
struct ParseError : Error {
    using Error::Error;
};

} // namespace qpb
