// config.hpp — run configuration: JSON ingestion, validation, emission

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omc/types.hpp"

namespace omc {

enum class ParamMode { physical, effective };

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    int count = 0;
};

// Effective-model parameter block: detunings, coupling magnitudes and rates
// given directly, the way figure captions state them. The phase of G_b comes
// from the run's theta list (G_a is taken real and nonnegative).
struct EffectiveConfig {
    double delta_a_eff = 0.0;
    double delta_b_eff = 0.0;
    double omega_m = 1.0;
    double J = 0.0;
    double G_a = 0.0;  // magnitude
    double G_b = 0.0;  // magnitude
    double gamma_a = 1.0;
    double gamma_b = 1.0;
    double gamma_m = 1.0;

    EffectiveParams materialize(double theta) const;
    // Carrier SystemParams holding the rates the matrix builders read
    // (omega_m, J, gammas); drives and bare couplings stay zero.
    SystemParams carrier() const;
};

struct DesignSpec {
    double target_G_mag = 0.0;
    double target_theta = 0.0;
};

struct RunConfig {
    ParamMode mode = ParamMode::effective;
    SystemParams physical;      // used when mode == physical
    EffectiveConfig effective;  // used when mode == effective
    GridSpec grid;
    std::vector<double> theta;  // one sweep per entry; effective mode only
    std::string output_dir;     // resolved against OMCIRC_OUTPUT_DIR / "."
    std::string tag = "sweep";  // filename prefix for emitted CSVs
    std::optional<DesignSpec> design;
};

// Angle parser accepting radians ("1.5707") or pi fractions ("pi/2",
// "3pi/4", "-pi", "0.5pi"). Throws ValidationError on anything else.
double parse_angle(const std::string& text);

// Strict JSON ingestion: unknown keys and missing required keys are
// ValidationErrors, as are malformed values. Angle-valued fields (phi_a,
// phi_b, theta entries, target_theta) accept numbers or pi-fraction strings.
RunConfig parse_config_text(const std::string& json_text);
RunConfig load_config(const std::string& path);

// Invariants beyond shape: positive rates, grid count >= 1 with coherent
// endpoints, a nonempty theta list exactly when the mode is effective.
void validate_config(const RunConfig& cfg);

// Serialization used for emitting preset configs; parse_config_text on the
// result reproduces the configuration exactly.
std::string config_to_json_text(const RunConfig& cfg);

// cfg.output_dir if set, else $OMCIRC_OUTPUT_DIR, else ".".
std::string resolve_output_dir(const std::string& configured);

}  // namespace omc
