#pragma once

#include <stdexcept>
#include <string>

namespace c2c {

// Bad flags, bad config file, out-of-range options. CLI maps this to exit 1.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable/malformed inputs, missing files, bad checkpoints. CLI maps this to exit 2.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite values where the numeric contracts forbid them.
struct ComputeError : std::runtime_error {
    explicit ComputeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace c2c
