// types.hpp — physical parameters and steady-state quantities
//
// Every rate, frequency and drive amplitude is expressed in units of a
// caller-chosen reference damping rate. No SI units appear anywhere.

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace omc {

using Complex = std::complex<double>;
using Matrix6cd = Eigen::Matrix<Complex, 6, 6>;
using Vector6d = Eigen::Matrix<double, 6, 1>;

// Parameters of the three-mode system: two driven optical modes (a, b)
// linearly coupled at rate J, each coupled to one mechanical mode (c) by
// radiation pressure. J and the drive amplitudes are real by convention;
// the drive phases carry all phase freedom.
struct SystemParams {
    double delta_a = 0.0;   // detuning of mode a from the drive frequency
    double delta_b = 0.0;
    double omega_m = 1.0;   // mechanical frequency
    double J = 0.0;         // optical-optical coupling (real)
    double g_a = 0.0;       // single-photon optomechanical couplings
    double g_b = 0.0;
    double gamma_a = 1.0;   // damping rates
    double gamma_b = 1.0;
    double gamma_m = 1.0;
    double eps_a = 0.0;     // drive amplitudes, nonnegative
    double eps_b = 0.0;
    double phi_a = 0.0;     // drive phases (radians)
    double phi_b = 0.0;

    // Throws ValidationError unless gamma_* > 0, omega_m > 0 and eps_* >= 0.
    void validate() const;
};

// Classical mean fields of the three modes.
struct SteadyState {
    Complex alpha;          // <a>
    Complex beta;           // <b>
    Complex xi;             // <c>
    double residual = 0.0;  // max-norm self-consistency residual,
                            // relative to max(|alpha|, |beta|, 1)
    int iterations = 0;
};

// Drive-enhanced couplings and displacement-shifted detunings.
struct EffectiveParams {
    double delta_a_eff = 0.0;  // delta_a + g_a (xi + conj xi)
    double delta_b_eff = 0.0;
    Complex G_a;               // g_a * alpha
    Complex G_b;               // g_b * beta
    double theta = 0.0;        // arg(G_b) - arg(G_a), reduced to [0, 2pi)
};

// Reduce an angle to the half-open interval [0, 2pi).
double wrap_two_pi(double angle);

}  // namespace omc
