#pragma once

#include <stdexcept>
#include <string>

namespace higgsgrass {

/// Violation of an operation precondition or an input-domain contract.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Parse failure in the polynomial grammar; `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// A configurable resource budget (S-pair count, retry count) was exhausted.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace higgsgrass
