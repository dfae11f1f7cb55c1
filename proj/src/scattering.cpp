#include "omc/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "omc/errors.hpp"

namespace omc {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Shared solve for both model sizes: Gamma (A)^{-1} Gamma - I with
// A = M - i omega I, via partial-pivot LU. The reciprocal condition estimate
// guards against evaluating on top of a pole.
template <typename MatrixT, typename DiagT>
MatrixT solve_scattering(const MatrixT& M, const DiagT& gamma_sqrt, double omega) {
    const MatrixT A = M - kI * omega * MatrixT::Identity();
    Eigen::PartialPivLU<MatrixT> lu(A);
    const double rc = lu.rcond();
    if (!(rc > 1.0 / kConditionLimit)) {
        const double cond = rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
        throw SingularAtFrequency(omega, cond);
    }
    MatrixT rhs = MatrixT::Zero();
    rhs.diagonal() = gamma_sqrt.template cast<Complex>();
    const MatrixT X = lu.solve(rhs);
    return gamma_sqrt.template cast<Complex>().asDiagonal() * X - MatrixT::Identity();
}

template <typename Model>
SweepTable sweep_impl(const Model& m, const std::vector<double>& grid, int jobs) {
    if (jobs < 1) throw ValidationError("jobs must be at least 1");
    for (size_t k = 1; k < grid.size(); ++k)
        if (!(grid[k - 1] < grid[k]))
            throw ValidationError("frequency grid must be strictly increasing");

    SweepTable table;
    table.grid = grid;
    table.rows.resize(grid.size());

    auto work = [&](size_t lo, size_t hi) {
        for (size_t k = lo; k < hi; ++k) {
            try {
                table.rows[k] = point_scattering(m, grid[k]);
            } catch (const SingularAtFrequency& e) {
                ScatteringResult r;
                r.omega = grid[k];
                r.ok = false;
                r.condition_estimate = e.condition_estimate;
                r.U = Eigen::MatrixXcd::Constant(0, 0, Complex{});
                r.T.setConstant(kNaN);
                r.S_vac.setConstant(kNaN);
                table.rows[k] = std::move(r);
            }
        }
    };

    const size_t n = grid.size();
    if (jobs == 1 || n < 2) {
        work(0, n);
        return table;
    }

    const size_t workers = std::min<size_t>(static_cast<size_t>(jobs), n);
    const size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> threads;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (size_t w = 0; w < workers; ++w) {
        const size_t lo = w * chunk;
        const size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&, lo, hi] {
            try {
                work(lo, hi);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return table;
}

}  // namespace

Matrix6cd scattering_matrix(const LinearModel& m, double omega) {
    return solve_scattering(m.M, m.Gamma, omega);
}

Eigen::Matrix3cd rwa_scattering(const RwaModel& m, double omega) {
    return solve_scattering(m.Mp, m.Gamma3, omega);
}

Eigen::Matrix3d transmission(const Matrix6cd& U) {
    Eigen::Matrix3d T;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) T(i, j) = std::norm(U(i, j)) + std::norm(U(i, j + 3));
    return T;
}

Eigen::Vector3d vacuum_spectra(const Matrix6cd& U) {
    Eigen::Vector3d s;
    for (int i = 0; i < 3; ++i)
        s(i) = std::norm(U(i, 3)) + std::norm(U(i, 4)) + std::norm(U(i, 5));
    return s;
}

Eigen::Vector3d output_spectra(const Eigen::Matrix3d& T, const Eigen::Vector3d& S_vac,
                               const Eigen::Vector3d& S_in) {
    for (int i = 0; i < 3; ++i)
        if (!(S_in(i) >= 0.0)) throw ValidationError("input spectra must be nonnegative");
    return T * S_in + S_vac;
}

Eigen::Vector3d InputSpectra::at(double omega) const {
    if (!s_a_in || !s_b_in || !s_c_in)
        throw ValidationError("all three input spectra must be set");
    Eigen::Vector3d v{s_a_in(omega), s_b_in(omega), s_c_in(omega)};
    for (int i = 0; i < 3; ++i)
        if (!(v(i) >= 0.0)) throw ValidationError("input spectra must be nonnegative");
    return v;
}

Eigen::Matrix3d rwa_transmission(const Eigen::Matrix3cd& S) {
    return S.cwiseAbs2();
}

ScatteringResult point_scattering(const LinearModel& m, double omega) {
    ScatteringResult r;
    r.omega = omega;
    const Matrix6cd U = scattering_matrix(m, omega);
    r.U = U;
    r.T = transmission(U);
    r.S_vac = vacuum_spectra(U);
    return r;
}

ScatteringResult point_scattering(const RwaModel& m, double omega) {
    ScatteringResult r;
    r.omega = omega;
    r.rwa = true;
    const Eigen::Matrix3cd S = rwa_scattering(m, omega);
    r.U = S;
    r.T = rwa_transmission(S);
    r.S_vac.setZero();
    return r;
}

std::vector<double> uniform_grid(double min, double max, int count) {
    if (count < 1) throw ValidationError("grid count must be at least 1");
    if (count == 1) {
        if (min != max) throw ValidationError("single-point grid requires min == max");
        return {min};
    }
    if (!(min < max)) throw ValidationError("grid requires min < max");
    std::vector<double> grid(static_cast<size_t>(count));
    const double step = (max - min) / (count - 1);
    for (int k = 0; k < count; ++k)
        grid[static_cast<size_t>(k)] = (k == count - 1) ? max : min + k * step;
    return grid;
}

SweepTable sweep(const LinearModel& m, const std::vector<double>& grid, int jobs) {
    return sweep_impl(m, grid, jobs);
}

SweepTable sweep(const RwaModel& m, const std::vector<double>& grid, int jobs) {
    return sweep_impl(m, grid, jobs);
}

}  // namespace omc
