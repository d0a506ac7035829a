#pragma once

#include <stdexcept>
#include <string>

namespace chipfire {

/// Malformed text input (graph, matrix, divisor, group or structure formats).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A graph-level precondition failed (typically: the graph is disconnected).
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A domain precondition failed: wrong divisor degree, invalid arithmetical
/// structure, bad parameters for a family, and so on.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A brute-force routine was asked to run beyond its size limit.
class GuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace chipfire
