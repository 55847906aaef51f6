#pragma once

#include <stdexcept>
#include <string>

namespace cnsf {

// Rejected input: invalid constructions, malformed files, cap breaches.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Internal consistency violation. Seeing one means a bug, not bad input.
class IntegrityError : public std::logic_error {
public:
    explicit IntegrityError(const std::string& what) : std::logic_error(what) {}
};

} // namespace cnsf
