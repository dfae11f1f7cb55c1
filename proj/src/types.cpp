#include "omc/types.hpp"

#include <cmath>
#include <string>

#include "omc/errors.hpp"

namespace omc {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
}

}  // namespace

void SystemParams::validate() const {
    require(std::isfinite(delta_a) && std::isfinite(delta_b), "detunings must be finite");
    require(std::isfinite(J), "J must be finite");
    require(std::isfinite(g_a) && std::isfinite(g_b), "couplings must be finite");
    require(std::isfinite(phi_a) && std::isfinite(phi_b), "phases must be finite");
    require(gamma_a > 0.0, "gamma_a must be positive");
    require(gamma_b > 0.0, "gamma_b must be positive");
    require(gamma_m > 0.0, "gamma_m must be positive");
    require(omega_m > 0.0, "omega_m must be positive");
    require(eps_a >= 0.0, "eps_a must be nonnegative");
    require(eps_b >= 0.0, "eps_b must be nonnegative");
}

double wrap_two_pi(double angle) {
    const double two_pi = 2.0 * M_PI;
    double r = std::fmod(angle, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r = 0.0;  // fmod roundoff can land exactly on 2pi
    return r;
}

}  // namespace omc
