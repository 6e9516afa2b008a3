#ifndef PDAPRUNE_ERROR_H
#define PDAPRUNE_ERROR_H

#include <pdaprune/pda.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace pdaprune {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an operation requires a well-formed automaton.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Diagnostic> diagnostics);
    [[nodiscard]] const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

/// Text-format error; `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// The summary automaton violates a structural property it must have after
/// construction. Indicates a bug in the forward construction.
class IntegrityError : public Error {
public:
    using Error::Error;
};

} // namespace pdaprune

#endif
