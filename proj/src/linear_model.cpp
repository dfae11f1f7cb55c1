#include "omc/linear_model.hpp"

#include <algorithm>
#include <cmath>

#include "omc/errors.hpp"

namespace omc {

namespace {
constexpr Complex kI{0.0, 1.0};
}

LinearModel build_full_matrix(const EffectiveParams& eff, const SystemParams& p) {
    const Complex Ga = eff.G_a;
    const Complex Gb = eff.G_b;
    const Complex Gac = std::conj(Ga);
    const Complex Gbc = std::conj(Gb);

    LinearModel m;
    m.M = Matrix6cd::Zero();

    // Annihilation block rows (da, db, dc).
    m.M(0, 0) = Complex{p.gamma_a / 2.0, eff.delta_a_eff};
    m.M(0, 1) = kI * p.J;
    m.M(0, 2) = kI * Ga;
    m.M(0, 5) = kI * Ga;

    m.M(1, 0) = kI * p.J;
    m.M(1, 1) = Complex{p.gamma_b / 2.0, eff.delta_b_eff};
    m.M(1, 2) = kI * Gb;
    m.M(1, 5) = kI * Gb;

    m.M(2, 0) = kI * Gac;
    m.M(2, 1) = kI * Gbc;
    m.M(2, 2) = Complex{p.gamma_m / 2.0, p.omega_m};
    m.M(2, 3) = kI * Ga;
    m.M(2, 4) = kI * Gb;

    // Conjugate block rows (da+, db+, dc+): entrywise conjugates under the
    // block-swap permutation.
    m.M(3, 2) = -kI * Gac;
    m.M(3, 3) = Complex{p.gamma_a / 2.0, -eff.delta_a_eff};
    m.M(3, 4) = -kI * p.J;
    m.M(3, 5) = -kI * Gac;

    m.M(4, 2) = -kI * Gbc;
    m.M(4, 3) = -kI * p.J;
    m.M(4, 4) = Complex{p.gamma_b / 2.0, -eff.delta_b_eff};
    m.M(4, 5) = -kI * Gbc;

    m.M(5, 0) = -kI * Gac;
    m.M(5, 1) = -kI * Gbc;
    m.M(5, 3) = -kI * Ga;
    m.M(5, 4) = -kI * Gb;
    m.M(5, 5) = Complex{p.gamma_m / 2.0, -p.omega_m};

    const double sa = std::sqrt(p.gamma_a);
    const double sb = std::sqrt(p.gamma_b);
    const double sm = std::sqrt(p.gamma_m);
    m.Gamma << sa, sb, sm, sa, sb, sm;
    return m;
}

RwaModel build_rwa_matrix(const EffectiveParams& eff, const SystemParams& p) {
    RwaModel m;
    m.Mp << Complex{p.gamma_a / 2.0, eff.delta_a_eff}, kI * p.J, kI * eff.G_a,
            kI * p.J, Complex{p.gamma_b / 2.0, eff.delta_b_eff}, kI * eff.G_b,
            kI * std::conj(eff.G_a), kI * std::conj(eff.G_b),
            Complex{p.gamma_m / 2.0, p.omega_m};
    m.Gamma3 << std::sqrt(p.gamma_a), std::sqrt(p.gamma_b), std::sqrt(p.gamma_m);
    return m;
}

bool rwa_regime_satisfied(const EffectiveParams& eff, const SystemParams& p) {
    const double cap = std::max({std::abs(p.J), std::abs(eff.G_a), std::abs(eff.G_b),
                                 p.gamma_a, p.gamma_b, p.gamma_m});
    return std::abs(eff.delta_a_eff - p.omega_m) <= 0.2 * p.omega_m &&
           std::abs(eff.delta_b_eff - p.omega_m) <= 0.2 * p.omega_m &&
           p.omega_m >= 5.0 * cap;
}

StabilityReport stability(const LinearModel& m) {
    Eigen::ComplexEigenSolver<Matrix6cd> solver(m.M, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw EigSolverFailure("eigensolver did not converge on the coefficient matrix");

    StabilityReport r;
    const auto& ev = solver.eigenvalues();
    for (int k = 0; k < 6; ++k) r.eigenvalue_real_parts[static_cast<size_t>(k)] = ev(k).real();
    std::sort(r.eigenvalue_real_parts.begin(), r.eigenvalue_real_parts.end());
    r.margin = r.eigenvalue_real_parts.front();
    r.stable = r.margin > kStabilityEpsilon;
    return r;
}

}  // namespace omc
