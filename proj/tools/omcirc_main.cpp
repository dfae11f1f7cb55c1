// omcirc_main.cpp — command-line front end

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "omc/config.hpp"
#include "omc/errors.hpp"
#include "omc/run.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "omcirc — frequency-domain simulator for a three-mode optomechanical "
        "system: steady states, scattering matrices, transmission spectra, "
        "vacuum-noise spectra, nonreciprocity and circulator presets"};

    std::string config_path;
    std::string command;
    std::string preset;
    int jobs = 1;
    bool emit_plot = false;

    app.add_option("--config", config_path, "Path to a JSON run configuration");
    app.add_option("--command", command,
                   "One of: steady-state, stability, sweep, circulator, design-drives, "
                   "compare-rwa, preset");
    app.add_option("--preset", preset, "Figure preset: fig2, fig3, fig4, fig5, fig7");
    app.add_option("--jobs", jobs, "Worker threads for frequency sweeps")
        ->check(CLI::PositiveNumber);
    app.add_flag("--emit-plot-script", emit_plot,
                 "Also write a gnuplot script referencing the emitted CSVs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error code=" << omc::kExitValidation << " kind=validation message=\""
                  << e.what() << "\"\n";
        return omc::kExitValidation;
    }

    omc::RunOptions opt;
    opt.jobs = jobs;
    opt.emit_plot_script = emit_plot;

    const bool preset_requested = !preset.empty() || command == "preset";
    if (preset_requested) {
        if (preset.empty()) {
            std::cerr << "error code=" << omc::kExitValidation
                      << " kind=validation message=\"--command preset requires --preset "
                         "<name>\"\n";
            return omc::kExitValidation;
        }
        if (!command.empty() && command != "preset") {
            std::cerr << "error code=" << omc::kExitValidation
                      << " kind=validation message=\"--preset only combines with --command "
                         "preset\"\n";
            return omc::kExitValidation;
        }
        std::string dir;
        if (!config_path.empty()) {
            try {
                dir = omc::load_config(config_path).output_dir;
            } catch (const std::exception& e) {
                std::cerr << "error code=" << omc::kExitValidation
                          << " kind=validation message=\"" << e.what() << "\"\n";
                return omc::kExitValidation;
            }
        }
        return omc::run_preset(preset, omc::resolve_output_dir(dir), opt, std::cout,
                               std::cerr);
    }

    if (command.empty() || config_path.empty()) {
        std::cerr << "error code=" << omc::kExitValidation
                  << " kind=validation message=\"--command and --config are required (or "
                     "use --preset)\"\n";
        return omc::kExitValidation;
    }

    omc::RunConfig cfg;
    try {
        cfg = omc::load_config(config_path);
    } catch (const std::exception& e) {
        std::cerr << "error code=" << omc::kExitValidation << " kind=validation message=\""
                  << e.what() << "\"\n";
        return omc::kExitValidation;
    }
    return omc::run_command(cfg, command, opt, std::cout, std::cerr);
}
