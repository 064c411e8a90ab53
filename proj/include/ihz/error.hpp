#pragma once

#include <stdexcept>
#include <string>

namespace ihz {

// Base class for every error the library raises.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed concrete syntax (circuit DSL or matrix files).
struct ParseError : Error {
    int line = 0;
    int col = 0;
    ParseError(const std::string& msg, int line_ = 0, int col_ = 0)
        : Error(line_ > 0 ? msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)
                          : msg),
          line(line_), col(col_) {}
};

// Interface mismatch in a circuit term.
struct TypeError : Error {
    explicit TypeError(const std::string& msg) : Error(msg) {}
};

// Incompatible matrix shapes.
struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// Argument outside the operation's domain (division by zero, non-square
// determinant, relation that is not a matrix graph, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

} // namespace ihz
