#ifndef CYCLO_ERRORS_HPP
#define CYCLO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyclo {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller passed arguments that violate an operation's preconditions
// (p not prime, e does not divide q-1, mismatched cyclotomic orders, ...).
struct InvalidInputError : Error {
    using Error::Error;
};

// Arguments are well-formed but the instance lies outside the supported
// families (wrong residue class of p, 2^m not dividing q-1, ...).
struct InvalidInstanceError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

// e does not divide p^v + 1 for any v, so the two-value closed form
// does not apply.
struct NotSemiprimitiveError : InvalidInstanceError {
    using InvalidInstanceError::InvalidInstanceError;
};

// An exact-arithmetic consistency check failed (non-exact division,
// power sum with an irrational part, ...).  Always indicates a bug,
// never bad user input.
struct InconsistencyError : Error {
    using Error::Error;
};

// A quadratic-partition search found no solution.
struct NoRepresentationError : Error {
    using Error::Error;
};

// A quadratic-partition search found more than one normalized solution,
// contradicting the uniqueness theorem.  Treated as a bug signal.
struct UniquenessViolationError : InconsistencyError {
    using InconsistencyError::InconsistencyError;
};

// The requested computation exceeds the configured resource budget.
struct BudgetError : Error {
    using Error::Error;
};

} // namespace cyclo

#endif
