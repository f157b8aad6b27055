#pragma once

#include <stdexcept>
#include <string>

namespace weilrep {

/// Mathematical precondition violated (division by zero, bad subgroup, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input is well-formed but asks for something outside what is implemented
/// (non-cyclotomic square roots, non-integral radical powers, ...).
class UnsupportedError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A working modulus or conductor ceiling is too small for the request.
class ConfigurationError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An oracle was asked about a descriptor it has no answer for.
class MissingDataError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A bounded search gave up without a verdict.
class InconclusiveError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed textual input.  `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// An oracle answer or replayed query disagrees with the computed object.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace weilrep
