// steady_state.hpp — mean-field solver, effective couplings, drive design

#pragma once

#include <string>
#include <vector>

#include "omc/types.hpp"

namespace omc {

struct SteadyStateOptions {
    double tol = 1e-12;   // residual target, relative to max(|alpha|, |beta|, 1)
    int max_iter = 10000;
    double damping = 0.5; // mixing factor of the displacement iteration
    double x0 = 0.0;      // starting displacement; 0 selects the branch
                          // continuously connected to the undriven state
};

// Solve the coupled mean-field equations self-consistently. The only feedback
// variable is the real mechanical displacement x = xi + conj(xi), so the
// problem reduces to a damped scalar fixed point x -> f(x); the optical
// amplitudes follow in closed form. Throws NonConvergence when the residual
// stays above tol for max_iter iterations. Multistable parameter regions
// exist (see scan_displacement); this solver returns the branch reached
// from x0.
SteadyState solve_steady_state(const SystemParams& p, const SteadyStateOptions& opt = {});
SteadyState solve_steady_state(const SystemParams& p, double tol, int max_iter);

EffectiveParams effective_params(const SystemParams& p, const SteadyState& s);

// One evaluation of the displacement map f: the displacement implied by the
// mean fields computed at displacement x.
double displacement_map(const SystemParams& p, double x);

// Multistability diagnostic: samples x - f(x) on a uniform grid and reports
// where it changes sign. More than one crossing means multiple coexisting
// steady-state branches.
struct DisplacementScan {
    int sign_changes = 0;
    std::vector<double> crossings;  // bisection-refined roots of x - f(x)
};
DisplacementScan scan_displacement(const SystemParams& p, double x_min, double x_max,
                                   int samples);

struct DriveDesign {
    double eps_a = 0.0;
    double eps_b = 0.0;
    double phi_a = 0.0;
    double phi_b = 0.0;
    std::vector<std::string> warnings;
};

// Invert the weak-coupling design relations for equal single-photon
// couplings g_a = g_b = g: amplitudes eps_a = eps_b = |G| omega_m / g and
// phases phi_a = pi/2, phi_b = phi_a + theta. Valid when the mechanical
// frequency dominates all damping rates and the detunings sit near omega_m;
// throws RegimeViolation when omega_m < 5 max(gamma), warns when the
// detunings are far from omega_m. The achieved |G_a| and theta are
// approximations; a round trip through solve_steady_state recovers them to
// about 10% and 0.1 rad in the intended regime.
DriveDesign design_drives(double target_G_mag, double target_theta, const SystemParams& p);

// Heuristic linearization check: warns when a coupled mode's implied mean
// occupancy amplitude |G/g| is below 10.
std::vector<std::string> linearization_warnings(const SystemParams& p, const SteadyState& s);

}  // namespace omc
