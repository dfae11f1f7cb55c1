#include "omc/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "omc/errors.hpp"

namespace omc {

namespace {

void append_row_values(std::string& out, const Eigen::Matrix3d& T) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            out += ',';
            out += format_sig12(T(i, j));
        }
}

}  // namespace

std::string format_sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string sweep_csv_text(const SweepTable& table, bool model_stable) {
    std::string out = kSweepCsvHeader;
    out += '\n';
    for (const auto& row : table.rows) {
        out += format_sig12(row.omega);
        append_row_values(out, row.T);
        for (int i = 0; i < 3; ++i) {
            out += ',';
            out += format_sig12(row.S_vac(i));
        }
        out += ',';
        out += (model_stable && row.ok) ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string circulator_csv_text(const SweepTable& full, const SweepTable& rwa,
                                bool model_stable) {
    if (full.rows.size() != rwa.rows.size())
        throw ValidationError("full and rotating-wave tables must share a grid");
    std::string out = kCirculatorCsvHeader;
    out += '\n';
    for (size_t k = 0; k < full.rows.size(); ++k) {
        const auto& fr = full.rows[k];
        const auto& rr = rwa.rows[k];
        out += format_sig12(fr.omega);
        append_row_values(out, fr.T);
        append_row_values(out, rr.T);
        out += ',';
        out += (model_stable && fr.ok && rr.ok) ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string deviation_csv_text(const DeviationReport& report) {
    std::string out = kDeviationCsvHeader;
    out += '\n';
    for (size_t k = 0; k < report.grid.size(); ++k) {
        out += format_sig12(report.grid[k]);
        append_row_values(out, report.per_point[k]);
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    const std::filesystem::path p(path);
    std::error_code ec;
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
    std::ofstream out(p, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace omc
