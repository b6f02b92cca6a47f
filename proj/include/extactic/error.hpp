#pragma once

#include <stdexcept>
#include <string>

namespace extactic {

// Bad user input: unparsable polynomial, wrong variable set, parameter out of range.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural guarantee failed at runtime (non-exact division where exactness
// was promised, degree bookkeeping off, ...).  These are never swallowed.
class InvariantViolation : public std::runtime_error {
public:
    explicit InvariantViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// A verification step contradicts a published claim the library re-checks.
class ClaimFalsified : public std::runtime_error {
public:
    explicit ClaimFalsified(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace extactic
