#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tlst {

struct ZeroDivision : std::domain_error {
    ZeroDivision() : std::domain_error("division by zero") {}
};

struct DegenerateNorm : std::logic_error {
    DegenerateNorm() : std::logic_error("norm a0^2 - a1^2 L vanished for a nonzero scalar") {}
};

struct UnknownConstant : std::invalid_argument {
    explicit UnknownConstant(const std::string& name)
        : std::invalid_argument("unknown constant '" + name + "'") {}
};

struct SizeMismatch : std::invalid_argument {
    SizeMismatch(std::size_t a, std::size_t b)
        : std::invalid_argument("partition sizes differ: " + std::to_string(a) + " vs " +
                                std::to_string(b)) {}
};

struct SyntaxError : std::invalid_argument {
    SyntaxError(const std::string& msg, std::size_t pos)
        : std::invalid_argument(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct PreconditionViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TiePresent : std::invalid_argument {
    TiePresent() : std::invalid_argument("word contains tie letters") {}
};

struct NotACrossing : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotTrivial : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a rewriting engine exceeds its step budget. Indicates a bug,
/// not bad input.
struct ReductionCap : std::runtime_error {
    explicit ReductionCap(std::size_t budget)
        : std::runtime_error("rewrite step budget of " + std::to_string(budget) + " exceeded") {}
};

}  // namespace tlst
