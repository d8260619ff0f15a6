#pragma once

#include <stdexcept>
#include <string>

namespace schurcalc {

// Base class for all domain errors so the CLI can map them to exit code 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct BoundExceeded : Error {
    using Error::Error;
};

struct SizeMismatch : Error {
    using Error::Error;
};

struct EmptyPartition : Error {
    using Error::Error;
};

struct ZeroObject : Error {
    using Error::Error;
};

struct InvalidSplit : Error {
    using Error::Error;
};

struct ImproperIdeal : Error {
    using Error::Error;
};

struct EmptyIdeal : Error {
    using Error::Error;
};

// Raised when checked 128-bit arithmetic would wrap. All computations are
// exact; hitting this means an input escaped the documented bounds.
struct ArithmeticOverflow : Error {
    using Error::Error;
};

}  // namespace schurcalc
