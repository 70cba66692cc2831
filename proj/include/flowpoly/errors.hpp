#pragma once

#include <stdexcept>
#include <string>

namespace flowpoly {

/// Input document could not be read (bad JSON, bad token, bad line).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input parsed but violates a structural requirement on H.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller broke an operation's precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two computations that must agree did not. Always a bug or a
/// violated hypothesis, never a user error.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace flowpoly
