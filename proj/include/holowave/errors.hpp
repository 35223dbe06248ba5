#pragma once

#include <stdexcept>
#include <string>

namespace hw {

struct GridMismatch : std::runtime_error {
    explicit GridMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Signals misuse of inverse or negative-order spectral multipliers.
struct NonZeroMean : std::runtime_error {
    explicit NonZeroMean(const std::string& what) : std::runtime_error(what) {}
};

// inf |1 + W_alpha| fell below the configured threshold.
struct InterfaceSingularity : std::runtime_error {
    explicit InterfaceSingularity(const std::string& what) : std::runtime_error(what) {}
};

struct StabilityViolation : std::runtime_error {
    explicit StabilityViolation(const std::string& what) : std::runtime_error(what) {}
};

struct NaNDetected : std::runtime_error {
    explicit NaNDetected(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hw
