#pragma once

#include <stdexcept>
#include <string>

namespace a4cx {

// Bad input: malformed files, preconditions the caller can violate.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A condition the theory guarantees failed; indicates a bug, not bad input.
struct InvariantViolation : std::logic_error {
    explicit InvariantViolation(const std::string& what)
        : std::logic_error(what) {}
};

}  // namespace a4cx
