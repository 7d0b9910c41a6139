#pragma once

#include <stdexcept>
#include <string>

namespace tokendom {

/// Thrown when an argument violates an operation's precondition.
class invalid_parameter : public std::invalid_argument {
public:
    explicit invalid_parameter(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when an operation would exceed a configured budget
/// (vertex budget, solver size limit, enumeration budget).
class resource_limit : public std::runtime_error {
public:
    explicit resource_limit(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tokendom
