// run.hpp — command dispatch shared by the CLI binary and the test suite

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "omc/config.hpp"

namespace omc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNonConvergence = 3;
inline constexpr int kExitInstability = 4;
inline constexpr int kExitSingular = 5;

struct RunOptions {
    int jobs = 1;
    bool emit_plot_script = false;
};

// Execute one command against a loaded configuration. Human-readable results
// go to out; failures produce a single machine-readable line on err
// ("error code=<n> kind=<k> message=\"...\"") and the matching exit code.
// Commands: steady-state, stability, sweep, circulator, design-drives,
// compare-rwa. Output files land under the resolved output_dir.
int run_command(const RunConfig& cfg, const std::string& command, const RunOptions& opt,
                std::ostream& out, std::ostream& err);

// Figure presets: emit the parameter files (one JSON per curve family) and
// run the sweeps that reproduce the published curves. Known names: fig2,
// fig3, fig4, fig5, fig7.
std::vector<RunConfig> preset_configs(const std::string& name);
int run_preset(const std::string& name, const std::string& output_dir, const RunOptions& opt,
               std::ostream& out, std::ostream& err);

}  // namespace omc
