#pragma once

#include <stdexcept>
#include <string>

namespace subsim {

/// Base class for all errors raised by the simulator libraries.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed model data, disconnected networks, singular matrices.
class ModelError : public Error {
  public:
    explicit ModelError(const std::string& msg) : Error(msg) {}
};

/// Iterative solver failed to converge within its iteration cap.
class ConvergenceError : public Error {
  public:
    ConvergenceError(const std::string& msg, double worst_mismatch)
        : Error(msg), worst_mismatch(worst_mismatch) {}
    double worst_mismatch = 0.0;
};

} // namespace subsim
