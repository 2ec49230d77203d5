#pragma once

#include <stdexcept>
#include <string>

namespace qsc {

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input is well-formed but outside an operation's domain
/// (partition outside the box, ring mismatch, non-symplectic matrix, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An identity that must hold for the rings in scope was violated at runtime.
class AssertionFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace qsc
