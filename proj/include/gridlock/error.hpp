#pragma once

#include <stdexcept>
#include <string>

namespace gridlock {

enum class ErrorKind {
    InvalidArgument,   // malformed request (bad parameter, self-loop, ...)
    UnknownVertex,     // vertex id not present in the graph
    InvalidEdge,       // edge missing or of the wrong kind for the operation
    Precondition,      // operation invoked on a graph that violates its precondition
    BudgetExceeded,    // enumeration or expansion budget exhausted
    ParseError,        // unreadable graph file or option value
    Mismatch,          // verification disagreement between independent methods
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace gridlock
