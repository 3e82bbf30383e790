#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mind {

// Error taxonomy used across the library.
// ContractViolation: a caller broke a documented precondition.
// NumericError: a computation produced a non-finite value.
// IoError / FormatError: filesystem trouble vs. malformed file contents.
struct ContractViolation : std::runtime_error {
    explicit ContractViolation(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void check_contract(bool ok, const std::string& msg) {
    if (!ok) throw ContractViolation(msg);
}

}  // namespace mind
