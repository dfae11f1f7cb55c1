#include "omc/steady_state.hpp"

#include <algorithm>
#include <cmath>

#include "omc/errors.hpp"

namespace omc {

namespace {

constexpr Complex kI{0.0, 1.0};

struct MeanFields {
    Complex alpha;
    Complex beta;
    Complex xi;
};

// Closed-form mean fields at a frozen mechanical displacement x. The
// displacement enters only through the shifted detunings, so the coupled
// optical equations are linear and solve directly; the mechanical amplitude
// then follows from the radiation-pressure force.
MeanFields fields_at(const SystemParams& p, double x) {
    const Complex ka{p.gamma_a / 2.0, p.delta_a + p.g_a * x};
    const Complex kb{p.gamma_b / 2.0, p.delta_b + p.g_b * x};
    const Complex drive_a = p.eps_a * std::polar(1.0, p.phi_a);
    const Complex drive_b = p.eps_b * std::polar(1.0, p.phi_b);
    const Complex denom = ka * kb + p.J * p.J;

    MeanFields f;
    f.alpha = (kb * drive_a - kI * p.J * drive_b) / denom;
    f.beta = (ka * drive_b - kI * p.J * drive_a) / denom;
    f.xi = -kI * (p.g_a * std::norm(f.alpha) + p.g_b * std::norm(f.beta)) /
           Complex{p.gamma_m / 2.0, p.omega_m};
    return f;
}

// Self-consistency residual of a candidate built at displacement x: rebuild
// the detuning shift from the candidate's own xi and measure how far the
// optical amplitudes move. The xi equation is satisfied identically by
// construction, so the optical mismatch carries the whole residual.
double relative_residual(const SystemParams& p, const MeanFields& f) {
    const MeanFields g = fields_at(p, 2.0 * f.xi.real());
    const double scale = std::max({std::abs(f.alpha), std::abs(f.beta), 1.0});
    return std::max(std::abs(f.alpha - g.alpha), std::abs(f.beta - g.beta)) / scale;
}

}  // namespace

double displacement_map(const SystemParams& p, double x) {
    return 2.0 * fields_at(p, x).xi.real();
}

SteadyState solve_steady_state(const SystemParams& p, const SteadyStateOptions& opt) {
    p.validate();
    if (!(opt.tol > 0.0)) throw ValidationError("steady-state tolerance must be positive");
    if (opt.max_iter < 0) throw ValidationError("max_iter must be nonnegative");
    if (!(opt.damping > 0.0 && opt.damping <= 1.0))
        throw ValidationError("damping must lie in (0, 1]");

    double x = opt.x0;
    double residual = 0.0;
    for (int it = 0; it <= opt.max_iter; ++it) {
        const MeanFields f = fields_at(p, x);
        residual = relative_residual(p, f);
        if (residual <= opt.tol) {
            SteadyState s;
            s.alpha = f.alpha;
            s.beta = f.beta;
            s.xi = f.xi;
            s.residual = residual;
            s.iterations = it;
            return s;
        }
        x = (1.0 - opt.damping) * x + opt.damping * 2.0 * f.xi.real();
    }
    throw NonConvergence(opt.max_iter, residual);
}

SteadyState solve_steady_state(const SystemParams& p, double tol, int max_iter) {
    SteadyStateOptions opt;
    opt.tol = tol;
    opt.max_iter = max_iter;
    return solve_steady_state(p, opt);
}

EffectiveParams effective_params(const SystemParams& p, const SteadyState& s) {
    const double x = 2.0 * s.xi.real();
    EffectiveParams e;
    e.delta_a_eff = p.delta_a + p.g_a * x;
    e.delta_b_eff = p.delta_b + p.g_b * x;
    e.G_a = p.g_a * s.alpha;
    e.G_b = p.g_b * s.beta;
    e.theta = wrap_two_pi(std::arg(e.G_b) - std::arg(e.G_a));
    return e;
}

DisplacementScan scan_displacement(const SystemParams& p, double x_min, double x_max,
                                   int samples) {
    p.validate();
    if (samples < 2) throw ValidationError("displacement scan needs at least 2 samples");
    if (!(x_min < x_max)) throw ValidationError("displacement scan needs x_min < x_max");

    auto h = [&](double x) { return x - displacement_map(p, x); };

    DisplacementScan scan;
    const double step = (x_max - x_min) / (samples - 1);
    double x_prev = x_min;
    double h_prev = h(x_prev);
    for (int k = 1; k < samples; ++k) {
        const double x_k = (k == samples - 1) ? x_max : x_min + k * step;
        const double h_k = h(x_k);
        if ((h_prev < 0.0 && h_k >= 0.0) || (h_prev > 0.0 && h_k <= 0.0)) {
            ++scan.sign_changes;
            double lo = x_prev, hi = x_k;
            for (int b = 0; b < 100; ++b) {
                const double mid = 0.5 * (lo + hi);
                if ((h(lo) <= 0.0) == (h(mid) <= 0.0))
                    lo = mid;
                else
                    hi = mid;
            }
            scan.crossings.push_back(0.5 * (lo + hi));
        }
        x_prev = x_k;
        h_prev = h_k;
    }
    return scan;
}

DriveDesign design_drives(double target_G_mag, double target_theta, const SystemParams& p) {
    p.validate();
    if (!(p.g_a > 0.0) || p.g_a != p.g_b)
        throw ValidationError("design_drives requires equal positive couplings g_a == g_b");
    if (!(target_G_mag >= 0.0) || !std::isfinite(target_G_mag))
        throw ValidationError("target coupling magnitude must be nonnegative");
    if (!std::isfinite(target_theta)) throw ValidationError("target theta must be finite");

    const double gamma_max = std::max({p.gamma_a, p.gamma_b, p.gamma_m});
    if (p.omega_m < 5.0 * gamma_max) throw RegimeViolation(p.omega_m, gamma_max);

    DriveDesign d;
    d.eps_a = d.eps_b = target_G_mag * p.omega_m / p.g_a;
    d.phi_a = M_PI / 2.0;
    d.phi_b = d.phi_a + target_theta;

    if (std::abs(p.delta_a - p.omega_m) > 0.2 * p.omega_m)
        d.warnings.push_back("delta_a is far from omega_m; designed drives assume the "
                             "effective detuning sits near the mechanical frequency");
    if (std::abs(p.delta_b - p.omega_m) > 0.2 * p.omega_m)
        d.warnings.push_back("delta_b is far from omega_m; designed drives assume the "
                             "effective detuning sits near the mechanical frequency");
    return d;
}

std::vector<std::string> linearization_warnings(const SystemParams& p, const SteadyState& s) {
    std::vector<std::string> w;
    if (p.g_a > 0.0 && std::abs(s.alpha) < 10.0)
        w.push_back("mode a mean amplitude |alpha| = " + std::to_string(std::abs(s.alpha)) +
                    " is small; the linearized model may not be trustworthy");
    if (p.g_b > 0.0 && std::abs(s.beta) < 10.0)
        w.push_back("mode b mean amplitude |beta| = " + std::to_string(std::abs(s.beta)) +
                    " is small; the linearized model may not be trustworthy");
    return w;
}

}  // namespace omc
