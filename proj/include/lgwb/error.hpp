#pragma once

#include <stdexcept>
#include <string>

namespace lgwb {

// Bad user input: malformed files, invalid parameters, contract violations.
// The CLI maps these to exit code 1.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A numerical procedure failed to produce a trustworthy answer.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace lgwb
