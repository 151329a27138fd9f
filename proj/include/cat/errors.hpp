#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cat {

/// Quadrature failed to reach the requested absolute tolerance.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(double lower, double upper, double tol)
        : std::runtime_error("quadrature did not converge on [" + std::to_string(lower) + ", " +
                             std::to_string(upper) + "] at abs tol " + std::to_string(tol)),
          lower_(lower), upper_(upper), tolerance_(tol) {}

    double lower() const { return lower_; }
    double upper() const { return upper_; }
    double tolerance() const { return tolerance_; }

private:
    double lower_;
    double upper_;
    double tolerance_;
};

/// A state component dropped below -negativity_tolerance during integration.
class NegativityError : public std::runtime_error {
public:
    NegativityError(double time, std::size_t cell, double value)
        : std::runtime_error("negativity violation at t=" + std::to_string(time) + ", cell " +
                             std::to_string(cell) + ": " + std::to_string(value)),
          time_(time), cell_(cell), value_(value) {}

    double time() const { return time_; }
    std::size_t cell() const { return cell_; }
    double value() const { return value_; }

private:
    double time_;
    std::size_t cell_;
    double value_;
};

/// Non-finite values appeared while advancing the ODE system.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(double time, std::size_t cell)
        : std::runtime_error("non-finite state at t=" + std::to_string(time) + ", cell " +
                             std::to_string(cell)),
          time_(time), cell_(cell) {}

    explicit IntegrationError(std::size_t cell)
        : std::runtime_error("non-finite value in step result, cell " + std::to_string(cell)),
          time_(0.0), cell_(cell) {}

    double time() const { return time_; }
    std::size_t cell() const { return cell_; }

private:
    double time_;
    std::size_t cell_;
};

}  // namespace cat
