#pragma once

#include <stdexcept>
#include <string>

namespace locham {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid input data: malformed graphs or maps, bad instances, domain violations.
struct ValidationError : Error {
    using Error::Error;
};

/// Text format errors. `line` is 1-based, 0 when not tied to a specific line.
struct ParseError : Error {
    int line = 0;
    explicit ParseError(const std::string& msg, int line_number = 0)
        : Error(line_number > 0 ? "line " + std::to_string(line_number) + ": " + msg : msg),
          line(line_number) {}
};

/// A computation refused up front because a size or budget guardrail would be exceeded.
struct ResourceError : Error {
    using Error::Error;
};

/// Invariant breakage inside the library; always a bug, never a user error.
struct InternalError : Error {
    using Error::Error;
};

} // namespace locham
