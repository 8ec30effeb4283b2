#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pjet {

// Base class for everything thrown by the library. `code()` is the stable
// machine-readable tag the CLI prints as error[<code>].
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// A precondition on user-supplied data failed (bad prime, bad dimensions,
// malformed generator, ...).
class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& message) : Error("InvalidInput", message) {}
};

// Exact division failed; carries the offending monomial as a witness.
class NotDivisible : public Error {
public:
    NotDivisible(const std::string& message, std::string witness)
        : Error("NotDivisible", message), witness_(std::move(witness)) {}

    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

// The configured term-count cap was exceeded mid-computation.
class ResourceLimit : public Error {
public:
    explicit ResourceLimit(const std::string& message) : Error("ResourceLimit", message) {}
};

// Expression text did not match the polynomial grammar.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t line, std::size_t column)
        : Error("SyntaxError", message), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A series operation needed a unit constant term.
class InvalidSeries : public Error {
public:
    explicit InvalidSeries(const std::string& message) : Error("InvalidSeries", message) {}
};

// Two graded-ring values live over different ambient specs (or truncations).
class AmbientMismatch : public Error {
public:
    explicit AmbientMismatch(const std::string& message) : Error("AmbientMismatch", message) {}
};

// An intersection-number lookup missed; carries the monomial key so the
// caller can extend the table. Absent keys are never silently zero.
class MissingIntersectionNumber : public Error {
public:
    MissingIntersectionNumber(const std::string& message, std::string monomial)
        : Error("MissingIntersectionNumber", message), monomial_(std::move(monomial)) {}

    const std::string& monomial() const noexcept { return monomial_; }

private:
    std::string monomial_;
};

// An arithmetic hypothesis of a bound (e.g. p > 2g) does not hold.
class HypothesisViolation : public Error {
public:
    explicit HypothesisViolation(const std::string& message)
        : Error("HypothesisViolation", message) {}
};

// An internal invariant broke. Not a user error; maps to CLI exit code 2.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& message) : Error("InternalError", message) {}
};

} // namespace pjet
