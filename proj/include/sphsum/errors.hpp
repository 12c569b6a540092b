#pragma once

#include <stdexcept>
#include <string>

namespace sphsum {

// Error taxonomy mirrors the CLI exit codes: RangeError -> 2,
// ValidationError -> 3, InternalError -> 4.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid or out-of-range input (bad dimension, size outside the bound
// segments, separation below the admissible minimum, ...).
class RangeError : public Error {
public:
    using Error::Error;
};

// Structured data that fails its own consistency checks (distance
// distributions that do not sum to the code size, malformed code files).
class ValidationError : public Error {
public:
    using Error::Error;
};

// A computed quantity violated an identity that must hold; indicates a bug
// or numerical breakdown, never bad user input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace sphsum
