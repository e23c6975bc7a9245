#pragma once

#include <stdexcept>
#include <string>

namespace splap {

// Configuration or precondition violation. The CLI maps this to exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Nonlinear solver failure. The CLI maps this to exit code 2.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, int step, double residual)
        : std::runtime_error(what), step(step), residual(residual) {}

    int step = -1;          // time step index, -1 if not step-bound
    double residual = 0.0;  // final discrete-L2 residual
};

}  // namespace splap
