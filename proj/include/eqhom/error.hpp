#pragma once

#include <stdexcept>
#include <string>

namespace eqhom {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A mathematical precondition does not hold (non-orientable input,
/// mismatched models, infinite group where a finite one is needed, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class ChainConditionViolated : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class ModelMismatch : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotFinite : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotConnected : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NonOrientable : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotPseudomanifold : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class BaseMismatch : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class DimensionMismatch : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class UnsupportedModel : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A hard computational budget was hit. Never a silent truncation.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace eqhom
