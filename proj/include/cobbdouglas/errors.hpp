#pragma once

#include <stdexcept>
#include <string>

namespace cobbdouglas {

/// Malformed or invalid input data (exit code 1 at the CLI).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerically degenerate problem: zero-variance regressor, singular
/// 2x2 system, coinciding growth rates (exit code 2 at the CLI).
class DegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cobbdouglas
