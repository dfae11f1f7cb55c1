// scattering.hpp — frequency-domain scattering, transmission, noise spectra

#pragma once

#include <functional>
#include <vector>

#include "omc/linear_model.hpp"

namespace omc {

// Condition-number ceiling for the frequency-domain solve; beyond it the
// point is reported as singular instead of returning garbage.
inline constexpr double kConditionLimit = 1e12;

// U(omega) = Gamma (M - i omega I)^{-1} Gamma - I, evaluated by LU solve
// (one solve per column of Gamma), never by explicit inversion. Throws
// SingularAtFrequency when the reciprocal condition estimate falls below
// 1/kConditionLimit.
Matrix6cd scattering_matrix(const LinearModel& m, double omega);

// Scattering probabilities: T(i,j) = |U(i,j)|^2 + |U(i,j+3)|^2, the photon
// (phonon) output at port i per input quantum at port j.
Eigen::Matrix3d transmission(const Matrix6cd& U);

// Output noise sourced by the conjugate-block vacuum inputs:
// s_vac(i) = |U(i,4)|^2 + |U(i,5)|^2 + |U(i,6)|^2 (1-based columns).
Eigen::Vector3d vacuum_spectra(const Matrix6cd& U);

// S_out = T S_in + S_vac. Input spectra must be nonnegative.
Eigen::Vector3d output_spectra(const Eigen::Matrix3d& T, const Eigen::Vector3d& S_vac,
                               const Eigen::Vector3d& S_in);

// Stationary input spectra as functions of frequency, one per port.
struct InputSpectra {
    std::function<double(double)> s_a_in;
    std::function<double(double)> s_b_in;
    std::function<double(double)> s_c_in;

    Eigen::Vector3d at(double omega) const;  // throws ValidationError on negative values
};

// Rotating-wave scattering: S(omega) = Gamma3 (Mp - i omega I)^{-1} Gamma3 - I.
// Unitary at every real frequency because the damping matches the diagonal.
Eigen::Matrix3cd rwa_scattering(const RwaModel& m, double omega);

// Elementwise |S|^2 of a rotating-wave scattering matrix, comparable to the
// full-model transmission.
Eigen::Matrix3d rwa_transmission(const Eigen::Matrix3cd& S);

// One frequency point. U is 6x6 on the full path, 3x3 on the rotating-wave
// path (rwa flag set); on the rotating-wave path S_vac is identically zero.
struct ScatteringResult {
    double omega = 0.0;
    Eigen::MatrixXcd U;
    bool rwa = false;
    Eigen::Matrix3d T = Eigen::Matrix3d::Zero();
    Eigen::Vector3d S_vac = Eigen::Vector3d::Zero();
    bool ok = true;                  // false: solve singular at this frequency
    double condition_estimate = 0.0; // populated when ok == false
};

ScatteringResult point_scattering(const LinearModel& m, double omega);
ScatteringResult point_scattering(const RwaModel& m, double omega);

struct SweepTable {
    std::vector<double> grid;            // strictly increasing
    std::vector<ScatteringResult> rows;  // one per grid point, grid order
};

// Inclusive endpoints, uniform spacing. count == 1 requires min == max.
std::vector<double> uniform_grid(double min, double max, int count);

// Evaluate every grid point. Rows are independent; jobs > 1 fans them out
// over threads, and the result is bitwise identical to the serial one.
// Singular points are recorded (ok = false, NaN payload), never fatal.
SweepTable sweep(const LinearModel& m, const std::vector<double>& grid, int jobs = 1);
SweepTable sweep(const RwaModel& m, const std::vector<double>& grid, int jobs = 1);

}  // namespace omc
