#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lefforge {

/// Invalid shape, index, or argument combination. Maps to CLI exit code 2.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation would exceed its configured enumeration budget. Maps to CLI exit code 3.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, std::uint64_t required)
        : std::runtime_error(what), required_(required) {}

    // Saturates at UINT64_MAX when the true count does not fit.
    std::uint64_t required() const noexcept { return required_; }

private:
    std::uint64_t required_;
};

/// Random draws kept landing on a degenerate point after the redraw budget.
class DegenerateDrawError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace lefforge
