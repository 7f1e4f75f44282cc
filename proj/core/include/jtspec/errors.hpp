#pragma once

#include <stdexcept>
#include <string>

namespace jtspec {

/// Raised when a transform or model term hits a singular denominator
/// (omega == +-omega0).
class ResonanceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when an eigensolver reports failure.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands built over incompatible bases or with mismatched dimensions.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace jtspec
