// csv.hpp — fixed-schema CSV emission

#pragma once

#include <string>

#include "omc/rwa_analytics.hpp"
#include "omc/scattering.hpp"

namespace omc {

inline constexpr char kSweepCsvHeader[] =
    "omega,T_aa,T_ab,T_ac,T_ba,T_bb,T_bc,T_ca,T_cb,T_cc,"
    "svac_a,svac_b,svac_c,stable_flag";

inline constexpr char kCirculatorCsvHeader[] =
    "omega,T_aa,T_ab,T_ac,T_ba,T_bb,T_bc,T_ca,T_cb,T_cc,"
    "rwa_T_aa,rwa_T_ab,rwa_T_ac,rwa_T_ba,rwa_T_bb,rwa_T_bc,rwa_T_ca,rwa_T_cb,rwa_T_cc,"
    "stable_flag";

inline constexpr char kDeviationCsvHeader[] =
    "omega,dev_aa,dev_ab,dev_ac,dev_ba,dev_bb,dev_bc,dev_ca,dev_cb,dev_cc";

// 12 significant digits, "C" locale.
std::string format_sig12(double v);

std::string sweep_csv_text(const SweepTable& table, bool model_stable);
std::string circulator_csv_text(const SweepTable& full, const SweepTable& rwa,
                                bool model_stable);
std::string deviation_csv_text(const DeviationReport& report);

// Writes text to path, creating parent directories. Throws IoError.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace omc
