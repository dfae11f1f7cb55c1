// rwa_analytics.hpp — closed-form circulator matrices, time-reversal
// predicate, and full-vs-RWA deviation reports

#pragma once

#include <vector>

#include "omc/scattering.hpp"

namespace omc {

// Tolerance for matching theta against the two supported phases.
inline constexpr double kCirculatorPhaseTol = 1e-9;

// Ideal circulator routing a -> b -> c -> a (theta = pi/2):
// rows a,b,c:  [[0,0,-i],[-i,0,0],[0,-1,0]].
Eigen::Matrix3cd circulator_counterclockwise();

// Ideal circulator routing a -> c -> b -> a (theta = 3pi/2):
// [[0,-i,0],[0,0,-1],[-i,0,0]].
Eigen::Matrix3cd circulator_clockwise();

// The closed-form scattering matrix at the optimal operating point. theta is
// reduced to [0, 2pi) and must land within kCirculatorPhaseTol of pi/2 or
// 3pi/2; otherwise throws UnsupportedPhase (no closed form exists elsewhere).
Eigen::Matrix3cd analytic_circulator_matrix(double theta);

// True iff theta is within tol of an integer multiple of pi, the condition
// under which the coupling loop carries no synthetic flux and transmission
// is reciprocal.
bool is_time_reversal_symmetric(double theta, double tol);

// Pointwise |T_full - |S_rwa|^2| over a frequency grid.
struct DeviationReport {
    std::vector<double> grid;
    std::vector<Eigen::Matrix3d> per_point;  // one 3x3 deviation per grid point
    Eigen::Matrix3d per_element_deviation;   // max over the grid, per element
    double max_abs_T_deviation = 0.0;
    double worst_frequency = 0.0;
    bool regime_warning = false;  // set when rwa_regime_satisfied fails
};

// Run both pipelines over the grid and report where they disagree. Both
// models must be dynamically stable; solver errors at individual points
// propagate.
DeviationReport compare_full_vs_rwa(const EffectiveParams& eff, const SystemParams& p,
                                    const std::vector<double>& grid, int jobs = 1);

}  // namespace omc
