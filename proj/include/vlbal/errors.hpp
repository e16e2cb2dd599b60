#pragma once

#include <stdexcept>
#include <string>

namespace vlbal {

// Invalid argument shape or parameter (odd length, q out of range, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Received data that no encoder output can produce.
class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Truncated or malformed stream container.
class FrameError : public DecodeError {
public:
    using DecodeError::DecodeError;
};

// Request exceeds an enumeration or state-space guard.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace vlbal
