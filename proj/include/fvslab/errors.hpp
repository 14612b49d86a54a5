#pragma once

#include <stdexcept>
#include <string>

namespace fvslab {

// Input violates an operation's stated precondition.
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured cap (vertex count, family cap, timeout) was exceeded.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// An internal guarantee failed.  Reaching this means a bug (or a false
// assumption about the input), never a user error.
struct IntegrityError : std::logic_error {
    explicit IntegrityError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fvslab
