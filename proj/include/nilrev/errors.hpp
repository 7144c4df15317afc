#pragma once

#include <stdexcept>
#include <string>

namespace nilrev {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroInverseError : Error {
    ZeroInverseError() : Error("inverse of zero") {}
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct RingMismatchError : Error {
    using Error::Error;
};

struct NotUnipotentError : Error {
    using Error::Error;
};

struct NotStarError : Error {
    using Error::Error;
};

struct NotAReverserError : Error {
    using Error::Error;
};

// Raised when the block identity of the basis-ordered conjugator fails.
// Provably unreachable from valid inputs; treated as a fatal internal error.
struct WitnessViolationError : Error {
    using Error::Error;
};

struct NotApplicableError : Error {
    using Error::Error;
};

struct ZeroInputError : Error {
    using Error::Error;
};

struct MalformedCertificateError : Error {
    using Error::Error;
};

struct DimensionTooLargeError : Error {
    using Error::Error;
};

// Text-format errors carry a position: `line`/`column` are 1-based,
// 0 when unknown.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_ = 0, int column_ = 0)
        : Error(msg), line(line_), column(column_) {}
};

}  // namespace nilrev
