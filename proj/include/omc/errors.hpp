// errors.hpp — exception types for validation and solver failures

#pragma once

#include <stdexcept>
#include <string>

namespace omc {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Steady-state fixed point did not reach tolerance within the iteration cap.
struct NonConvergence : std::runtime_error {
    NonConvergence(int iterations_, double last_residual_)
        : std::runtime_error("steady state did not converge after " +
                             std::to_string(iterations_) +
                             " iterations (residual " + std::to_string(last_residual_) + ")"),
          iterations(iterations_),
          last_residual(last_residual_) {}
    int iterations;
    double last_residual;
};

// Requested operating point is outside the resolved-sideband regime the
// drive-design relations are derived for.
struct RegimeViolation : std::runtime_error {
    RegimeViolation(double omega_m_, double gamma_max_)
        : std::runtime_error("omega_m = " + std::to_string(omega_m_) +
                             " is below 5x the largest damping rate " +
                             std::to_string(gamma_max_) +
                             "; drive design is not trustworthy here"),
          omega_m(omega_m_),
          gamma_max(gamma_max_) {}
    double omega_m;
    double gamma_max;
};

struct EigSolverFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (M - i omega I) is numerically singular at a real frequency; for a stable
// model this should never trigger, so it usually flags an instability.
struct SingularAtFrequency : std::runtime_error {
    SingularAtFrequency(double omega_, double condition_estimate_)
        : std::runtime_error("linear solve singular at omega = " + std::to_string(omega_) +
                             " (condition estimate " + std::to_string(condition_estimate_) + ")"),
          omega(omega_),
          condition_estimate(condition_estimate_) {}
    double omega;
    double condition_estimate;
};

// Closed-form circulator matrices exist only at the two optimal phases.
struct UnsupportedPhase : std::runtime_error {
    explicit UnsupportedPhase(double theta_)
        : std::runtime_error("no closed-form circulator matrix at theta = " + std::to_string(theta_)),
          theta(theta_) {}
    double theta;
};

// Coefficient matrix has an eigenvalue with nonpositive real part.
struct InstabilityError : std::runtime_error {
    explicit InstabilityError(double margin_)
        : std::runtime_error("model is dynamically unstable (eigenvalue margin " +
                             std::to_string(margin_) + ")"),
          margin(margin_) {}
    double margin;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace omc
