#pragma once

#include <stdexcept>
#include <string>

namespace heider {

// Precondition violation on an operation argument (bad n, non-distinct
// indices, value out of range).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A balance check that needs a complete signed graph met a zero entry.
class IndeterminateSignError : public std::runtime_error {
public:
    explicit IndeterminateSignError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite value produced during integration. Carries the step index at
// which it was detected.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& msg, long step)
        : std::runtime_error(msg + " (step " + std::to_string(step) + ")"), step_index(step) {}

    long step_index;
};

// Configuration file or flag rejected; the message names the offending key.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// File read/write failure; the message names the path.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace heider
