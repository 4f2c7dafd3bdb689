#pragma once

#include <stdexcept>
#include <string>

namespace cycubic {

/// Malformed or inconsistent input data (wrong dimensions, bad files).
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operation applied outside its mathematical domain (non-unit inversion,
/// exp of a series with nonzero constant term, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A verified precondition on the geometry failed (cubic condition, symmetry).
/// Carries the witness text of the first failure found.
class ConditionError : public std::runtime_error {
public:
    explicit ConditionError(const std::string& msg, std::string witness = {})
        : std::runtime_error(msg), witness_(std::move(witness)) {}
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

} // namespace cycubic
