#pragma once

#include <stdexcept>
#include <string>

namespace nilab {

/// Operand shapes disagree (ragged vectors, mismatched orders or ambient dims).
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// `codim(S in T)` called with S not contained in T.
class ContainmentViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidOrder : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A generator matrix that is not strictly upper triangular.
class InvalidGenerator : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotASubalgebra : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal invariant failed: a closure or solver bug, never bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace nilab
