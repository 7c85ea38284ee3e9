#pragma once

#include <stdexcept>
#include <string>

namespace parking {

/// Malformed input: empty sequences, out-of-range entries, bad JSON shape.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Enumeration size above the configured cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition does not hold (e.g. an infeasible sign vector).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal algorithm invariant was violated. Always a bug, never recovered from.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A point lies on one of the hyperplanes x_j - x_k = 0 or x_j - x_k = 1.
class OnHyperplaneError : public std::domain_error {
public:
    OnHyperplaneError(int j, int k, std::string value)
        : std::domain_error("point lies on hyperplane x_" + std::to_string(j) + " - x_" +
                            std::to_string(k) + " = " + value),
          j_(j), k_(k), value_(std::move(value)) {}

    int j() const noexcept { return j_; }
    int k() const noexcept { return k_; }
    const std::string& value() const noexcept { return value_; }

private:
    int j_;
    int k_;
    std::string value_;
};

}  // namespace parking
