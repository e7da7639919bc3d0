#ifndef LEIBNIZ_ERRORS_HPP
#define LEIBNIZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leibniz {

// Malformed input text (JSON syntax, bad rational literal, unknown label, ...).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally well-formed input that violates a mathematical precondition
// (table is not a Leibniz algebra, matrix is singular, basis not adapted, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Caller-side misuse of an operation (dimension mismatch, unknown catalog
// name, parameter out of range, ...).
struct ArgError : std::runtime_error {
    explicit ArgError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace leibniz

#endif
