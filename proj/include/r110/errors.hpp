#pragma once

#include <stdexcept>

namespace r110 {

/// Malformed or inconsistent experiment configuration.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Initial row whose decomposition is not clean (turbulent or with
/// unrecognized residuals); sweeps refuse to start from it.
struct TurbulentInitial : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Weight-rule case the model leaves undefined (0 or >= 3 initial gliders).
struct UnsupportedCase : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No weighted event carries base probability, so the rescaling constant
/// does not exist. Library code reports this as an empty optional; the
/// CLI converts it into this exception to reach its exit code.
struct NormalizationImpossible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace r110
