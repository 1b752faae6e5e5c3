#pragma once

#include <stdexcept>
#include <string>

namespace smithles {

// An operation was asked about a case the engine deliberately does not
// model (infinite groups where finiteness is required, bases outside the
// supported enumeration, truncated monomial bases).
class UnsupportedCaseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A presentation is internally inconsistent: a hom matrix incompatible
// with the codomain relations, duplicate database names, a malformed
// sequence document.
class PresentationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller violated an operation contract (degree mismatch, wrong knowledge
// state for check_exact, out-of-range graded degree).
class ContractError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text input rejected by a parser; position is 0-based offset into the
// parsed string, line/column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace smithles
