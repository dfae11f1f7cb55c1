#include "omc/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "omc/errors.hpp"

namespace omc {

using nlohmann::json;

namespace {

double require_number(const json& j, const std::string& key) {
    if (!j.contains(key)) throw ValidationError("missing key: " + key);
    const auto& v = j.at(key);
    if (!v.is_number()) throw ValidationError("key " + key + " must be a number");
    return v.get<double>();
}

// Angle-valued entries accept numbers or pi-fraction strings.
double require_angle(const json& v, const std::string& where) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_angle(v.get<std::string>());
    throw ValidationError(where + " must be a number or a pi-fraction string");
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw ValidationError("unknown key in " + where + ": " + it.key());
}

json params_to_json(const RunConfig& cfg) {
    json p;
    if (cfg.mode == ParamMode::physical) {
        const SystemParams& s = cfg.physical;
        p = {{"delta_a", s.delta_a}, {"delta_b", s.delta_b}, {"omega_m", s.omega_m},
             {"J", s.J},             {"g_a", s.g_a},         {"g_b", s.g_b},
             {"gamma_a", s.gamma_a}, {"gamma_b", s.gamma_b}, {"gamma_m", s.gamma_m},
             {"eps_a", s.eps_a},     {"eps_b", s.eps_b},     {"phi_a", s.phi_a},
             {"phi_b", s.phi_b}};
    } else {
        const EffectiveConfig& e = cfg.effective;
        p = {{"delta_a_eff", e.delta_a_eff}, {"delta_b_eff", e.delta_b_eff},
             {"omega_m", e.omega_m},         {"J", e.J},
             {"G_a", e.G_a},                 {"G_b", e.G_b},
             {"gamma_a", e.gamma_a},         {"gamma_b", e.gamma_b},
             {"gamma_m", e.gamma_m}};
    }
    return p;
}

}  // namespace

EffectiveParams EffectiveConfig::materialize(double theta) const {
    EffectiveParams e;
    e.delta_a_eff = delta_a_eff;
    e.delta_b_eff = delta_b_eff;
    e.G_a = Complex{G_a, 0.0};
    e.G_b = std::polar(G_b, theta);
    e.theta = wrap_two_pi(theta);
    return e;
}

SystemParams EffectiveConfig::carrier() const {
    SystemParams p;
    p.delta_a = delta_a_eff;
    p.delta_b = delta_b_eff;
    p.omega_m = omega_m;
    p.J = J;
    p.gamma_a = gamma_a;
    p.gamma_b = gamma_b;
    p.gamma_m = gamma_m;
    return p;
}

double parse_angle(const std::string& text) {
    // Plain radians first.
    {
        std::size_t used = 0;
        try {
            const double v = std::stod(text, &used);
            std::string rest = text.substr(used);
            if (rest.find_first_not_of(" \t") == std::string::npos) return v;
        } catch (const std::exception&) {
        }
    }
    // k*pi or k*pi/n, k optionally signed/fractional, n positive.
    static const std::regex pi_form(
        R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)?)\s*\*?\s*pi\s*(?:/\s*(\d+\.?\d*))?\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, pi_form)) {
        double k = 1.0;
        const std::string coeff = m[1].str();
        if (coeff == "-")
            k = -1.0;
        else if (!coeff.empty() && coeff != "+")
            k = std::stod(coeff);
        double n = 1.0;
        if (m[2].matched) {
            n = std::stod(m[2].str());
            if (n == 0.0) throw ValidationError("angle denominator must be nonzero: " + text);
        }
        return k * M_PI / n;
    }
    throw ValidationError("cannot parse angle: " + text);
}

RunConfig parse_config_text(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("config must be a JSON object");
    reject_unknown_keys(
        j, {"mode", "params", "grid", "theta", "output_dir", "tag", "design"}, "config");

    RunConfig cfg;
    if (!j.contains("mode") || !j.at("mode").is_string())
        throw ValidationError("config requires a string \"mode\"");
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "physical")
        cfg.mode = ParamMode::physical;
    else if (mode == "effective")
        cfg.mode = ParamMode::effective;
    else
        throw ValidationError("mode must be \"physical\" or \"effective\", got " + mode);

    if (!j.contains("params") || !j.at("params").is_object())
        throw ValidationError("config requires a \"params\" object");
    const json& p = j.at("params");
    if (cfg.mode == ParamMode::physical) {
        reject_unknown_keys(p,
                            {"delta_a", "delta_b", "omega_m", "J", "g_a", "g_b", "gamma_a",
                             "gamma_b", "gamma_m", "eps_a", "eps_b", "phi_a", "phi_b"},
                            "params");
        SystemParams& s = cfg.physical;
        s.delta_a = require_number(p, "delta_a");
        s.delta_b = require_number(p, "delta_b");
        s.omega_m = require_number(p, "omega_m");
        s.J = require_number(p, "J");
        s.g_a = require_number(p, "g_a");
        s.g_b = require_number(p, "g_b");
        s.gamma_a = require_number(p, "gamma_a");
        s.gamma_b = require_number(p, "gamma_b");
        s.gamma_m = require_number(p, "gamma_m");
        s.eps_a = require_number(p, "eps_a");
        s.eps_b = require_number(p, "eps_b");
        if (!p.contains("phi_a") || !p.contains("phi_b"))
            throw ValidationError("physical params require phi_a and phi_b");
        s.phi_a = require_angle(p.at("phi_a"), "phi_a");
        s.phi_b = require_angle(p.at("phi_b"), "phi_b");
    } else {
        reject_unknown_keys(p,
                            {"delta_a_eff", "delta_b_eff", "omega_m", "J", "G_a", "G_b",
                             "gamma_a", "gamma_b", "gamma_m"},
                            "params");
        EffectiveConfig& e = cfg.effective;
        e.delta_a_eff = require_number(p, "delta_a_eff");
        e.delta_b_eff = require_number(p, "delta_b_eff");
        e.omega_m = require_number(p, "omega_m");
        e.J = require_number(p, "J");
        e.G_a = require_number(p, "G_a");
        e.G_b = require_number(p, "G_b");
        e.gamma_a = require_number(p, "gamma_a");
        e.gamma_b = require_number(p, "gamma_b");
        e.gamma_m = require_number(p, "gamma_m");
    }

    if (!j.contains("grid") || !j.at("grid").is_object())
        throw ValidationError("config requires a \"grid\" object");
    const json& g = j.at("grid");
    reject_unknown_keys(g, {"min", "max", "count"}, "grid");
    cfg.grid.min = require_number(g, "min");
    cfg.grid.max = require_number(g, "max");
    if (!g.contains("count") || !g.at("count").is_number_integer())
        throw ValidationError("grid count must be an integer");
    cfg.grid.count = g.at("count").get<int>();

    if (j.contains("theta")) {
        if (!j.at("theta").is_array()) throw ValidationError("theta must be an array");
        for (const auto& t : j.at("theta"))
            cfg.theta.push_back(require_angle(t, "theta entry"));
    }
    if (j.contains("output_dir")) {
        if (!j.at("output_dir").is_string())
            throw ValidationError("output_dir must be a string");
        cfg.output_dir = j.at("output_dir").get<std::string>();
    }
    if (j.contains("tag")) {
        if (!j.at("tag").is_string()) throw ValidationError("tag must be a string");
        cfg.tag = j.at("tag").get<std::string>();
    }
    if (j.contains("design")) {
        const json& d = j.at("design");
        if (!d.is_object()) throw ValidationError("design must be an object");
        reject_unknown_keys(d, {"target_G_mag", "target_theta"}, "design");
        DesignSpec spec;
        spec.target_G_mag = require_number(d, "target_G_mag");
        if (!d.contains("target_theta"))
            throw ValidationError("design requires target_theta");
        spec.target_theta = require_angle(d.at("target_theta"), "target_theta");
        cfg.design = spec;
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

void validate_config(const RunConfig& cfg) {
    if (cfg.mode == ParamMode::physical) {
        cfg.physical.validate();
        if (!cfg.theta.empty())
            throw ValidationError(
                "theta list is only meaningful in effective mode; in physical mode the "
                "phase difference follows from the drives");
    } else {
        const EffectiveConfig& e = cfg.effective;
        if (!(e.gamma_a > 0.0 && e.gamma_b > 0.0 && e.gamma_m > 0.0))
            throw ValidationError("damping rates must be positive");
        if (!(e.omega_m > 0.0)) throw ValidationError("omega_m must be positive");
        if (!(e.G_a >= 0.0 && e.G_b >= 0.0))
            throw ValidationError("G_a and G_b are magnitudes and must be nonnegative");
        if (cfg.theta.empty())
            throw ValidationError("effective mode requires at least one theta entry");
    }
    for (double t : cfg.theta)
        if (!std::isfinite(t)) throw ValidationError("theta entries must be finite");

    if (cfg.grid.count < 1) throw ValidationError("grid count must be at least 1");
    if (cfg.grid.count == 1) {
        if (cfg.grid.min != cfg.grid.max)
            throw ValidationError("single-point grid requires min == max");
    } else if (!(cfg.grid.min < cfg.grid.max)) {
        throw ValidationError("grid requires min < max");
    }
    if (cfg.tag.empty() || cfg.tag.find('/') != std::string::npos)
        throw ValidationError("tag must be a nonempty filename fragment");
}

std::string config_to_json_text(const RunConfig& cfg) {
    json j;
    j["mode"] = cfg.mode == ParamMode::physical ? "physical" : "effective";
    j["params"] = params_to_json(cfg);
    j["grid"] = {{"min", cfg.grid.min}, {"max", cfg.grid.max}, {"count", cfg.grid.count}};
    j["theta"] = cfg.theta;
    if (!cfg.output_dir.empty()) j["output_dir"] = cfg.output_dir;
    j["tag"] = cfg.tag;
    if (cfg.design)
        j["design"] = {{"target_G_mag", cfg.design->target_G_mag},
                       {"target_theta", cfg.design->target_theta}};
    return j.dump(2) + "\n";
}

std::string resolve_output_dir(const std::string& configured) {
    if (!configured.empty()) return configured;
    if (const char* env = std::getenv("OMCIRC_OUTPUT_DIR"); env && *env) return env;
    return ".";
}

}  // namespace omc
