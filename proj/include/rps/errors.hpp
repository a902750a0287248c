#pragma once

#include <stdexcept>
#include <string>

namespace rps {

// Caller passed arguments that violate an operation's contract.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A series expansion was requested around a singular point
// (denominator constant term is zero or not a unit).
class SingularExpansionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The cluster construction cannot handle the instance
// (one pattern is a factor of another).
class UnsupportedInstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Recurrence extension hit a vanishing leading coefficient with no
// supplied term to bridge it.
class SingularExtensionError : public std::runtime_error {
public:
    SingularExtensionError(const std::string& msg, long at)
        : std::runtime_error(msg), index(at) {}
    long index;
};

} // namespace rps
