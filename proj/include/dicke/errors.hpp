// errors.hpp — exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace dicke {

// Bad run configuration or invalid physical parameters. CLI exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// The integrator could not continue (step-size underflow). CLI exit code 3.
struct IntegrationError : std::runtime_error {
    double last_good_time;
    IntegrationError(const std::string& msg, double t)
        : std::runtime_error(msg), last_good_time(t) {}
};

// File output failure. CLI exit code 5.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace dicke
