#include "omc/run.hpp"

#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "omc/csv.hpp"
#include "omc/errors.hpp"
#include "omc/rwa_analytics.hpp"
#include "omc/scattering.hpp"
#include "omc/steady_state.hpp"

namespace omc {

namespace {

namespace fs = std::filesystem;

void emit_error(std::ostream& err, int code, const std::string& kind,
                const std::string& message) {
    err << "error code=" << code << " kind=" << kind << " message=\"" << message << "\"\n";
}

std::string join_path(const std::string& dir, const std::string& file) {
    return (fs::path(dir) / file).string();
}

void print_kv(std::ostream& out, const std::string& key, double v) {
    out << key << "=" << format_sig12(v) << "\n";
}

// Resolved effective parameters plus the rates needed for matrix assembly.
struct ModelInputs {
    EffectiveParams eff;
    SystemParams rates;
};

ModelInputs inputs_for_theta(const RunConfig& cfg, size_t theta_index) {
    ModelInputs mi;
    if (cfg.mode == ParamMode::effective) {
        mi.eff = cfg.effective.materialize(cfg.theta[theta_index]);
        mi.rates = cfg.effective.carrier();
    } else {
        const SteadyState s = solve_steady_state(cfg.physical);
        mi.eff = effective_params(cfg.physical, s);
        mi.rates = cfg.physical;
    }
    return mi;
}

size_t theta_slots(const RunConfig& cfg) {
    return cfg.mode == ParamMode::effective ? cfg.theta.size() : 1;
}

StabilityReport require_stable(const LinearModel& model) {
    const StabilityReport rep = stability(model);
    if (!rep.stable) throw InstabilityError(rep.margin);
    return rep;
}

// Small gnuplot helper pointing at the emitted CSVs.
void emit_plot_script(const RunConfig& cfg, const std::vector<std::string>& csv_names,
                      const std::string& dir) {
    std::string s;
    s += "set datafile separator \",\"\n";
    s += "set key autotitle columnhead\n";
    s += "set xlabel \"omega\"\n";
    s += "set ylabel \"scattering probability\"\n";
    bool first = true;
    for (const auto& name : csv_names) {
        s += first ? "plot " : ",\\\n     ";
        s += "\"" + name + "\" using 1:3 with lines, \"" + name +
             "\" using 1:5 with lines";
        first = false;
    }
    s += "\n";
    write_text_file(join_path(dir, cfg.tag + "_plot.gp"), s);
}

int cmd_steady_state(const RunConfig& cfg, std::ostream& out) {
    if (cfg.mode != ParamMode::physical)
        throw ValidationError("steady-state requires physical mode (raw drives)");
    const SteadyState s = solve_steady_state(cfg.physical);
    const EffectiveParams e = effective_params(cfg.physical, s);
    print_kv(out, "alpha_re", s.alpha.real());
    print_kv(out, "alpha_im", s.alpha.imag());
    print_kv(out, "beta_re", s.beta.real());
    print_kv(out, "beta_im", s.beta.imag());
    print_kv(out, "xi_re", s.xi.real());
    print_kv(out, "xi_im", s.xi.imag());
    print_kv(out, "delta_a_eff", e.delta_a_eff);
    print_kv(out, "delta_b_eff", e.delta_b_eff);
    print_kv(out, "G_a_abs", std::abs(e.G_a));
    print_kv(out, "G_a_arg", std::arg(e.G_a));
    print_kv(out, "G_b_abs", std::abs(e.G_b));
    print_kv(out, "G_b_arg", std::arg(e.G_b));
    print_kv(out, "theta", e.theta);
    print_kv(out, "residual", s.residual);
    out << "iterations=" << s.iterations << "\n";
    for (const auto& w : linearization_warnings(cfg.physical, s))
        out << "warning=" << w << "\n";
    return kExitOk;
}

int cmd_stability(const RunConfig& cfg, std::ostream& out) {
    for (size_t k = 0; k < theta_slots(cfg); ++k) {
        const ModelInputs mi = inputs_for_theta(cfg, k);
        const StabilityReport rep = stability(build_full_matrix(mi.eff, mi.rates));
        out << "theta=" << format_sig12(mi.eff.theta) << " stable=" << (rep.stable ? 1 : 0)
            << " margin=" << format_sig12(rep.margin) << " re_eigs=";
        for (size_t i = 0; i < rep.eigenvalue_real_parts.size(); ++i) {
            if (i) out << ";";
            out << format_sig12(rep.eigenvalue_real_parts[i]);
        }
        out << "\n";
    }
    return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, const RunOptions& opt, std::ostream& out,
              std::ostream& err) {
    const std::string dir = resolve_output_dir(cfg.output_dir);
    const std::vector<double> grid = uniform_grid(cfg.grid.min, cfg.grid.max, cfg.grid.count);
    std::vector<std::string> csv_names;
    size_t singular_rows = 0;
    for (size_t k = 0; k < theta_slots(cfg); ++k) {
        const ModelInputs mi = inputs_for_theta(cfg, k);
        const LinearModel model = build_full_matrix(mi.eff, mi.rates);
        require_stable(model);
        const SweepTable table = sweep(model, grid, opt.jobs);
        for (const auto& row : table.rows)
            if (!row.ok) ++singular_rows;
        const std::string name = cfg.tag + "_" + std::to_string(k) + ".csv";
        write_text_file(join_path(dir, name), sweep_csv_text(table, true));
        out << "wrote " << join_path(dir, name) << " rows=" << table.rows.size()
            << " theta=" << format_sig12(mi.eff.theta) << "\n";
        csv_names.push_back(name);
    }
    if (opt.emit_plot_script) emit_plot_script(cfg, csv_names, dir);
    if (singular_rows > 0) {
        emit_error(err, kExitSingular, "singular_at_frequency",
                   std::to_string(singular_rows) +
                       " grid points were numerically singular; rows flagged in the CSV");
        return kExitSingular;
    }
    return kExitOk;
}

int cmd_circulator(const RunConfig& cfg, const RunOptions& opt, std::ostream& out) {
    if (cfg.mode != ParamMode::effective)
        throw ValidationError("circulator requires effective mode");
    const std::string dir = resolve_output_dir(cfg.output_dir);
    const std::vector<double> grid = uniform_grid(cfg.grid.min, cfg.grid.max, cfg.grid.count);
    const double thetas[2] = {M_PI / 2.0, 3.0 * M_PI / 2.0};
    for (size_t k = 0; k < 2; ++k) {
        const EffectiveParams eff = cfg.effective.materialize(thetas[k]);
        const SystemParams rates = cfg.effective.carrier();
        const LinearModel full = build_full_matrix(eff, rates);
        require_stable(full);
        if (!rwa_regime_satisfied(eff, rates))
            out << "warning=operating point is outside the rotating-wave regime; the "
                   "rwa_T columns are not trustworthy here\n";
        const RwaModel rwa = build_rwa_matrix(eff, rates);
        const SweepTable tf = sweep(full, grid, opt.jobs);
        const SweepTable tr = sweep(rwa, grid, opt.jobs);
        const std::string name = cfg.tag + "_circulator_" + std::to_string(k) + ".csv";
        write_text_file(join_path(dir, name), circulator_csv_text(tf, tr, true));
        out << "wrote " << join_path(dir, name) << " theta=" << format_sig12(eff.theta)
            << "\n";
    }
    return kExitOk;
}

int cmd_design_drives(const RunConfig& cfg, std::ostream& out) {
    if (cfg.mode != ParamMode::physical)
        throw ValidationError("design-drives requires physical mode");
    if (!cfg.design)
        throw ValidationError("design-drives requires a \"design\" block in the config");
    const DriveDesign d =
        design_drives(cfg.design->target_G_mag, cfg.design->target_theta, cfg.physical);
    print_kv(out, "eps_a", d.eps_a);
    print_kv(out, "eps_b", d.eps_b);
    print_kv(out, "phi_a", d.phi_a);
    print_kv(out, "phi_b", d.phi_b);
    for (const auto& w : d.warnings) out << "warning=" << w << "\n";

    // Round trip: push the designed drives through the full solve and report
    // what actually comes out.
    SystemParams p = cfg.physical;
    p.eps_a = d.eps_a;
    p.eps_b = d.eps_b;
    p.phi_a = d.phi_a;
    p.phi_b = d.phi_b;
    const SteadyState s = solve_steady_state(p);
    const EffectiveParams e = effective_params(p, s);
    const double target_theta = wrap_two_pi(cfg.design->target_theta);
    print_kv(out, "recovered_G_mag", std::abs(e.G_a));
    print_kv(out, "recovered_theta", e.theta);
    print_kv(out, "target_G_mag", cfg.design->target_G_mag);
    print_kv(out, "target_theta", target_theta);
    if (cfg.design->target_G_mag > 0.0)
        print_kv(out, "G_mag_rel_err",
                 std::abs(std::abs(e.G_a) - cfg.design->target_G_mag) / cfg.design->target_G_mag);
    const double dtheta = std::abs(std::remainder(e.theta - target_theta, 2.0 * M_PI));
    print_kv(out, "theta_abs_err", dtheta);
    return kExitOk;
}

int cmd_compare_rwa(const RunConfig& cfg, const RunOptions& opt, std::ostream& out) {
    const std::string dir = resolve_output_dir(cfg.output_dir);
    const std::vector<double> grid = uniform_grid(cfg.grid.min, cfg.grid.max, cfg.grid.count);
    for (size_t k = 0; k < theta_slots(cfg); ++k) {
        const ModelInputs mi = inputs_for_theta(cfg, k);
        require_stable(build_full_matrix(mi.eff, mi.rates));
        const DeviationReport rep = compare_full_vs_rwa(mi.eff, mi.rates, grid, opt.jobs);
        const std::string name = cfg.tag + "_rwa_dev_" + std::to_string(k) + ".csv";
        write_text_file(join_path(dir, name), deviation_csv_text(rep));
        out << "compare-rwa theta=" << format_sig12(mi.eff.theta)
            << " max_dev=" << format_sig12(rep.max_abs_T_deviation)
            << " worst_omega=" << format_sig12(rep.worst_frequency)
            << " regime_warning=" << (rep.regime_warning ? 1 : 0) << " file=" << name << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_command(const RunConfig& cfg, const std::string& command, const RunOptions& opt,
                std::ostream& out, std::ostream& err) {
    try {
        if (opt.jobs < 1) throw ValidationError("--jobs must be at least 1");
        validate_config(cfg);
        if (command == "steady-state") return cmd_steady_state(cfg, out);
        if (command == "stability") return cmd_stability(cfg, out);
        if (command == "sweep") return cmd_sweep(cfg, opt, out, err);
        if (command == "circulator") return cmd_circulator(cfg, opt, out);
        if (command == "design-drives") return cmd_design_drives(cfg, out);
        if (command == "compare-rwa") return cmd_compare_rwa(cfg, opt, out);
        throw ValidationError("unknown command: " + command);
    } catch (const NonConvergence& e) {
        emit_error(err, kExitNonConvergence, "non_convergence", e.what());
        return kExitNonConvergence;
    } catch (const InstabilityError& e) {
        emit_error(err, kExitInstability, "instability", e.what());
        return kExitInstability;
    } catch (const SingularAtFrequency& e) {
        emit_error(err, kExitSingular, "singular_at_frequency", e.what());
        return kExitSingular;
    } catch (const EigSolverFailure& e) {
        emit_error(err, kExitSingular, "eig_solver_failure", e.what());
        return kExitSingular;
    } catch (const RegimeViolation& e) {
        emit_error(err, kExitValidation, "regime_violation", e.what());
        return kExitValidation;
    } catch (const UnsupportedPhase& e) {
        emit_error(err, kExitValidation, "unsupported_phase", e.what());
        return kExitValidation;
    } catch (const IoError& e) {
        emit_error(err, kExitValidation, "io", e.what());
        return kExitValidation;
    } catch (const ValidationError& e) {
        emit_error(err, kExitValidation, "validation", e.what());
        return kExitValidation;
    } catch (const std::exception& e) {
        emit_error(err, kExitValidation, "internal", e.what());
        return kExitValidation;
    }
}

}  // namespace omc
