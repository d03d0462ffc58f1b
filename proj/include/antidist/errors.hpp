#pragma once

#include <stdexcept>
#include <string>

namespace antidist {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSquareError : Error {
    using Error::Error;
};

struct NotUnitaryError : Error {
    double residual;
    explicit NotUnitaryError(double res)
        : Error("matrix is not unitary, residual " + std::to_string(res)), residual(res) {}
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct OutOfRangeError : Error {
    using Error::Error;
};

struct ConvergenceFailureError : Error {
    double residual;
    explicit ConvergenceFailureError(double res)
        : Error("eigendecomposition reconstruction residual " + std::to_string(res)),
          residual(res) {}
};

struct SolverFailureError : Error {
    double best_gap;
    long iterations;
    SolverFailureError(double gap, long iters)
        : Error("solver reached iteration cap with gap " + std::to_string(gap)),
          best_gap(gap), iterations(iters) {}
};

struct NotNeededError : Error {
    using Error::Error;
};

struct SearchExhaustedError : Error {
    using Error::Error;
};

struct PreconditionFailedError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace antidist
