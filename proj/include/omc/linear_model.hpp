// linear_model.hpp — linearized fluctuation dynamics and stability
//
// Index convention, frozen here for every downstream consumer: the
// fluctuation vector is V = (da, db, dc, da+, db+, dc+), i.e. rows/columns
// 1..3 are the annihilation-type fluctuations of modes a, b, c and rows/
// columns 4..6 their conjugates. The dynamics read dV/dt = -M V + Gamma V_in
// with Gamma = diag(sqrt(gamma_a), sqrt(gamma_b), sqrt(gamma_m)) repeated
// over both blocks. The 3x3 rotating-wave variant keeps only (da, db, dc).

#pragma once

#include <array>

#include "omc/types.hpp"

namespace omc {

struct LinearModel {
    Matrix6cd M;      // coefficient matrix
    Vector6d Gamma;   // diagonal of the damping matrix
};

struct RwaModel {
    Eigen::Matrix3cd Mp;
    Eigen::Vector3d Gamma3;
};

// Assemble the full 6x6 coefficient matrix, including the anti-resonant
// optomechanical couplings that mix the two blocks.
LinearModel build_full_matrix(const EffectiveParams& eff, const SystemParams& p);

// Assemble the 3x3 rotating-wave matrix (anti-resonant terms dropped).
RwaModel build_rwa_matrix(const EffectiveParams& eff, const SystemParams& p);

// True when omega_m ~ delta' and both dominate every coupling and damping
// rate by at least 5x, the regime where the rotating-wave model can be
// trusted.
bool rwa_regime_satisfied(const EffectiveParams& eff, const SystemParams& p);

struct StabilityReport {
    std::array<double, 6> eigenvalue_real_parts{};  // ascending
    bool stable = false;
    double margin = 0.0;  // smallest real part
};

// Margins at or below this count as marginal; numerical eigenvalues carry
// roundoff.
inline constexpr double kStabilityEpsilon = 1e-10;

// Dynamical stability requires every eigenvalue of M to have positive real
// part. Throws EigSolverFailure if the dense eigensolver does not converge.
StabilityReport stability(const LinearModel& m);

}  // namespace omc
