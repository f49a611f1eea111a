#pragma once

#include <stdexcept>
#include <string>

namespace chvatal {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input document does not conform to the family JSON format.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An operation was invoked outside its stated precondition
/// (family not intersecting, rank too high, vertex unknown, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The flip hypothesis fails: some face contains v but avoids both a and b.
class HypothesisError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A search or iteration budget was exhausted before completion.
class BudgetError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// An internal invariant failed. The transformation and certification
/// routines re-check every step they take; this firing means the
/// implementation (not the input) is wrong.
class InvariantError : public Error {
public:
    using Error::Error;
};

namespace detail {
/// Throws InvariantError with the given message unless cond holds.
inline void check_invariant(bool cond, const std::string& msg) {
    if (!cond) throw InvariantError(msg);
}
} // namespace detail

} // namespace chvatal
