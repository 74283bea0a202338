#pragma once

#include <stdexcept>
#include <string>

namespace advinv {

// Rejected inputs: bad grids, mismatched shapes, invalid config keys.
// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Run-time numerical failures: solver non-convergence, exponent overflow
// guards, non-positive denominators. The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace advinv
