#pragma once

#include <stdexcept>
#include <string>

namespace detpred {

// Configuration / usage problems. The CLI maps these to exit code 2.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input data. The CLI maps these to exit code 3.
struct data_error : std::runtime_error {
    explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Broken internal invariant. The CLI maps these to exit code 4.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace detpred
