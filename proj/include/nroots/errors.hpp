#pragma once

#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace nroots {

/// Short scientific rendering of a double for diagnostics.
inline std::string sci(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", value);
    return buf;
}

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input does not satisfy an operation's hypothesis (non-normal, non-Hermitian,
/// indefinite, mismatched dimensions, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// AX - XB = S has no unique solution: the spectra of A and B intersect.
class SingularSystemError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// The Jacobi eigensolver ran out of sweeps.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A property guaranteed by construction failed to hold. Never expected.
class TheoremViolationError : public Error {
public:
    using Error::Error;
};

/// Malformed matrix file, with 1-based position of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column, const std::string& source = "")
        : Error((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + message),
          message_(message),
          line_(line),
          column_(column) {}

    const std::string& message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace nroots
