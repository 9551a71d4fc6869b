#pragma once

#include <stdexcept>
#include <string>

namespace oinv {

// Malformed external data: files, JSON schemas, symbol/move text.
// The CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally well-formed input that violates a mathematical
// precondition: odd triple-point count, inapplicable move, singular or
// non-symplectic action, degenerate kernel pairing. CLI exit code 1.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oinv
