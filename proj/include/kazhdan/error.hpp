#pragma once

#include <stdexcept>
#include <string>

namespace kazhdan {

// Bad caller input: malformed files, violated preconditions, dimension
// mismatches. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured size cap was exceeded (closure or regular representation).
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kazhdan
