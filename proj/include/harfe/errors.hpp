#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace harfe {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix/vector dimension mismatch.
struct ShapeError : Error {
    using Error::Error;
};

// Weight sparsity q outside [1, d].
struct InvalidOrderError : Error {
    using Error::Error;
};

// Nonsensical size parameter (N = 0, empty dataset, ...).
struct InvalidSizeError : Error {
    using Error::Error;
};

// Sparsity level s outside [1, N].
struct InvalidSparsityError : Error {
    using Error::Error;
};

// Restricted least-squares system singular or near-singular at m_lambda = 0.
struct IllConditionedError : Error {
    IllConditionedError(const std::string& what, double cond)
        : Error(what), condition_estimate(cond) {}
    double condition_estimate;
};

// File could not be opened/read/written.
struct IoError : Error {
    using Error::Error;
};

// Malformed file content; `row` is 1-based (0 = not row-specific).
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t row_number = 0)
        : Error(what), row(row_number) {}
    std::size_t row;
};

// Config or model document violates the documented schema.
struct SchemaError : Error {
    using Error::Error;
};

// Serialized document carries an unsupported schema_version.
struct VersionError : Error {
    using Error::Error;
};

// Exact enumeration would exceed the configured subset budget.
struct BudgetExceededError : Error {
    using Error::Error;
};

// Operation requires a model with at least one nonzero coefficient.
struct EmptyModelError : Error {
    using Error::Error;
};

}  // namespace harfe
