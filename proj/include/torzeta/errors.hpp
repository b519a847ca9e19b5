#pragma once

#include <stdexcept>
#include <string>

namespace torzeta {

// Malformed input file or violated data invariant.
class SpectrumError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Evaluation point outside the half-plane of absolute convergence, or a
// spectrum too short to certify the requested evaluation.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numerical integration failed to reach its tolerance.
class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace torzeta
