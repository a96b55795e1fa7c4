#pragma once

#include <stdexcept>
#include <string>

namespace ramanujan {

/// A precondition on a domain value was violated (non-prime modulus,
/// non-invertible residue, precision budget too small, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ramanujan
