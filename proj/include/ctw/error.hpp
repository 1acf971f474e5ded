#pragma once

#include <stdexcept>
#include <string>

namespace ctw {

/// Base of every error raised by the library. The CLI maps the subclasses
/// onto distinct exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (graph, layout, JSON). Carries the 1-based line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// An operation was called outside its contract (bad layout, shared
/// endpoints, missing edge, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class InvalidLayoutError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Input exceeds the configured size of an exhaustive oracle.
class OracleLimitError : public Error {
public:
    using Error::Error;
};

/// A DP table would exceed the memory budget.
class ResourceError : public Error {
public:
    ResourceError(const std::string& what, int width) : Error(what), width_(width) {}
    int width() const noexcept { return width_; }

private:
    int width_;
};

/// A runtime-checked invariant failed. Never expected; indicates a bug or
/// a falsified construction.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace ctw
