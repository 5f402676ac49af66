#ifndef TTB_ERRORS_HPP
#define TTB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ttb {

// Thrown when two tensors with incompatible shapes meet.
class ShapeError : public std::runtime_error {
public:
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

// Parameter outside its admissible range (k, p, theta, grid bounds, caps).
class RangeError : public std::runtime_error {
public:
    explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

// Input outside the mathematical domain of an operation (negative entries,
// non-positive-definite tensor fed to log, unsorted spectrum, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Iterative solver failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature tail estimate or similar accuracy guarantee cannot be met.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// Inconsistent run configuration (hypothesis mismatch, bad spec file, ...).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A statistic was requested from too few samples.
class InsufficientSamples : public std::runtime_error {
public:
    explicit InsufficientSamples(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency check failed; indicates a bug, not bad user input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace ttb

#endif
