#include "omc/rwa_analytics.hpp"

#include <cmath>

#include "omc/errors.hpp"

namespace omc {

namespace {
constexpr Complex kMinusI{0.0, -1.0};
}

Eigen::Matrix3cd circulator_counterclockwise() {
    Eigen::Matrix3cd S = Eigen::Matrix3cd::Zero();
    S(0, 2) = kMinusI;
    S(1, 0) = kMinusI;
    S(2, 1) = Complex{-1.0, 0.0};
    return S;
}

Eigen::Matrix3cd circulator_clockwise() {
    Eigen::Matrix3cd S = Eigen::Matrix3cd::Zero();
    S(0, 1) = kMinusI;
    S(1, 2) = Complex{-1.0, 0.0};
    S(2, 0) = kMinusI;
    return S;
}

Eigen::Matrix3cd analytic_circulator_matrix(double theta) {
    const double t = wrap_two_pi(theta);
    if (std::abs(t - M_PI / 2.0) <= kCirculatorPhaseTol) return circulator_counterclockwise();
    if (std::abs(t - 3.0 * M_PI / 2.0) <= kCirculatorPhaseTol) return circulator_clockwise();
    throw UnsupportedPhase(theta);
}

bool is_time_reversal_symmetric(double theta, double tol) {
    if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");
    return std::abs(std::remainder(theta, M_PI)) <= tol;
}

DeviationReport compare_full_vs_rwa(const EffectiveParams& eff, const SystemParams& p,
                                    const std::vector<double>& grid, int jobs) {
    const LinearModel full = build_full_matrix(eff, p);
    const RwaModel rwa = build_rwa_matrix(eff, p);

    DeviationReport rep;
    rep.grid = grid;
    rep.regime_warning = !rwa_regime_satisfied(eff, p);
    rep.per_element_deviation.setZero();
    if (grid.empty()) return rep;

    // Both pipelines ride the same sweep machinery; a singular point in
    // either one propagates out of the sweep as an all-NaN row, which the
    // reduction below turns loud rather than hiding.
    const SweepTable tf = sweep(full, grid, jobs);
    const SweepTable tr = sweep(rwa, grid, jobs);

    rep.per_point.resize(grid.size());
    for (size_t k = 0; k < grid.size(); ++k) {
        if (!tf.rows[k].ok)
            throw SingularAtFrequency(grid[k], tf.rows[k].condition_estimate);
        if (!tr.rows[k].ok)
            throw SingularAtFrequency(grid[k], tr.rows[k].condition_estimate);
        rep.per_point[k] = (tf.rows[k].T - tr.rows[k].T).cwiseAbs();
    }

    rep.worst_frequency = grid.front();
    for (size_t k = 0; k < grid.size(); ++k) {
        rep.per_element_deviation = rep.per_element_deviation.cwiseMax(rep.per_point[k]);
        const double d = rep.per_point[k].maxCoeff();
        if (d > rep.max_abs_T_deviation) {
            rep.max_abs_T_deviation = d;
            rep.worst_frequency = grid[k];
        }
    }
    return rep;
}

}  // namespace omc
