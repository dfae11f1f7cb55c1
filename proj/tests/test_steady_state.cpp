#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "omc/errors.hpp"
#include "omc/steady_state.hpp"

#include "oracles.hpp"

using namespace omc;

namespace {

// Fig.-2-style operating point driven through the design relations:
// g_a = g_b = 1e-3, omega_m = 10, all gammas 1, J = 1/2.
SystemParams designed_params(double target_G, double target_theta) {
    SystemParams p;
    p.omega_m = 10.0;
    p.delta_a = p.delta_b = 10.0;
    p.J = 0.5;
    p.g_a = p.g_b = 1e-3;
    const DriveDesign d = design_drives(target_G, target_theta, p);
    p.eps_a = d.eps_a;
    p.eps_b = d.eps_b;
    p.phi_a = d.phi_a;
    p.phi_b = d.phi_b;
    return p;
}

// Shift the bare detunings until the converged effective detunings land on
// omega_m, the operating regime the design relations assume.
SystemParams compensate_detunings(SystemParams p) {
    for (int it = 0; it < 8; ++it) {
        const SteadyState s = solve_steady_state(p);
        const EffectiveParams e = effective_params(p, s);
        p.delta_a += p.omega_m - e.delta_a_eff;
        p.delta_b += p.omega_m - e.delta_b_eff;
    }
    return p;
}

}  // namespace

TEST_CASE("undriven system sits at the origin") {
    SystemParams p;
    p.omega_m = 10.0;
    p.delta_a = p.delta_b = 10.0;
    p.J = 0.5;
    p.g_a = p.g_b = 1e-3;
    const SteadyState s = solve_steady_state(p);
    CHECK(std::abs(s.alpha) == 0.0);
    CHECK(std::abs(s.beta) == 0.0);
    CHECK(std::abs(s.xi) == 0.0);
    CHECK(s.residual == 0.0);
}

TEST_CASE("decoupled resonant mode reduces to 2 eps / gamma") {
    SystemParams p;
    p.delta_a = 0.0;
    p.delta_b = 3.0;
    p.omega_m = 10.0;
    p.J = 0.0;
    p.g_a = p.g_b = 0.0;
    p.gamma_a = 2.0;
    p.eps_a = 5.0;
    p.phi_a = 0.7;
    const SteadyState s = solve_steady_state(p);
    const Complex expected = 2.0 * p.eps_a * std::polar(1.0, p.phi_a) / p.gamma_a;
    CHECK(std::abs(s.alpha - expected) < 1e-14 * std::abs(expected));
    CHECK(std::abs(s.xi) == 0.0);
}

TEST_CASE("solver matches the brute-force displacement root scan") {
    const SystemParams p = designed_params(0.5, M_PI / 2.0);
    const SteadyState s = solve_steady_state(p);

    const auto roots = test::displacement_roots_by_scan(p, -300.0, 10.0, 20001);
    REQUIRE(!roots.empty());
    // branch continuously connected to x = 0: the root nearest zero
    double root = roots.front();
    for (double r : roots)
        if (std::abs(r) < std::abs(root)) root = r;

    const double x_solver = 2.0 * s.xi.real();
    CHECK(x_solver == doctest::Approx(root).epsilon(1e-9));

    const test::RefFields ref = test::reference_fields(p, root);
    CHECK(std::abs(s.alpha - ref.alpha) < 1e-8 * std::abs(ref.alpha));
    CHECK(std::abs(s.beta - ref.beta) < 1e-8 * std::abs(ref.beta));
    CHECK(std::abs(s.xi - ref.xi) < 1e-8 * std::abs(ref.xi));
}

TEST_CASE("converged residual re-substitutes within tolerance") {
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        SystemParams p;
        p.delta_a = 10.0 * u01(rng);
        p.delta_b = 10.0 * u01(rng);
        p.omega_m = 2.0 + 10.0 * u01(rng);
        p.J = u01(rng);
        p.g_a = 0.01 * u01(rng);
        p.g_b = 0.01 * u01(rng);
        p.gamma_a = 0.5 + u01(rng);
        p.gamma_b = 0.5 + u01(rng);
        p.gamma_m = 0.5 + u01(rng);
        p.eps_a = 20.0 * u01(rng);
        p.eps_b = 20.0 * u01(rng);
        p.phi_a = 2.0 * M_PI * u01(rng);
        p.phi_b = 2.0 * M_PI * u01(rng);

        const SteadyState s = solve_steady_state(p);
        CHECK(s.residual <= 1e-12);

        // independent re-substitution through the reference formulas
        const test::RefFields rhs = test::reference_fields(p, 2.0 * s.xi.real());
        const double scale = std::max({std::abs(s.alpha), std::abs(s.beta), 1.0});
        CHECK(std::abs(s.alpha - rhs.alpha) / scale <= 1e-12);
        CHECK(std::abs(s.beta - rhs.beta) / scale <= 1e-12);
    }
}

TEST_CASE("common drive-phase shift rotates the optical amplitudes only") {
    const SystemParams p = designed_params(0.5, M_PI / 2.0);
    const SteadyState s0 = solve_steady_state(p);
    const EffectiveParams e0 = effective_params(p, s0);

    const double chi = 1.234;
    SystemParams q = p;
    q.phi_a += chi;
    q.phi_b += chi;
    const SteadyState s1 = solve_steady_state(q);
    const EffectiveParams e1 = effective_params(q, s1);

    const Complex rot = std::polar(1.0, chi);
    CHECK(std::abs(s1.alpha - s0.alpha * rot) < 1e-10);
    CHECK(std::abs(s1.beta - s0.beta * rot) < 1e-10);
    CHECK(std::abs(std::abs(s1.alpha) - std::abs(s0.alpha)) < 1e-10);
    CHECK(std::abs(s1.xi - s0.xi) < 1e-10);
    CHECK(std::abs(e1.theta - e0.theta) < 1e-10);
}

TEST_CASE("with zero optomechanical coupling the response is exactly linear in the drives") {
    SystemParams p;
    p.delta_a = 4.0;
    p.delta_b = 6.0;
    p.omega_m = 10.0;
    p.J = 0.7;
    p.g_a = p.g_b = 0.0;
    p.eps_a = 3.0;
    p.eps_b = 1.5;
    p.phi_a = 0.3;
    p.phi_b = 2.1;
    const SteadyState s1 = solve_steady_state(p);
    SystemParams q = p;
    q.eps_a *= 2.0;
    q.eps_b *= 2.0;
    const SteadyState s2 = solve_steady_state(q);
    CHECK(std::abs(s2.alpha) == 2.0 * std::abs(s1.alpha));  // bitwise: scaling by 2 is exact
    CHECK(std::abs(s2.beta) == 2.0 * std::abs(s1.beta));
}

TEST_CASE("non-convergence is reported, never silently accepted") {
    SystemParams p;
    p.delta_a = 5.0;
    p.omega_m = 1.0;
    p.g_a = 1.0;
    p.g_b = 0.0;
    p.eps_a = 20.0;
    CHECK_THROWS_AS(solve_steady_state(p), NonConvergence);
    try {
        solve_steady_state(p);
    } catch (const NonConvergence& e) {
        CHECK(e.iterations == 10000);
        CHECK(e.last_residual > 1e-12);
    }
}

TEST_CASE("displacement scan counts steady-state branches") {
    SystemParams weak = designed_params(0.5, M_PI / 2.0);
    const DisplacementScan single = scan_displacement(weak, -300.0, 10.0, 4001);
    CHECK(single.sign_changes == 1);

    // bistable point: strong single-photon coupling, red-shifted drive
    SystemParams bi;
    bi.delta_a = 5.0;
    bi.omega_m = 1.0;
    bi.g_a = 0.2;
    bi.g_b = 0.0;
    bi.eps_a = 5.0;
    const DisplacementScan multi = scan_displacement(bi, -60.0, 5.0, 8001);
    CHECK(multi.sign_changes == 3);

    // the solver lands on the branch connected to x = 0
    const SteadyState s = solve_steady_state(bi);
    const double x = 2.0 * s.xi.real();
    double nearest = multi.crossings.front();
    for (double r : multi.crossings)
        if (std::abs(r) < std::abs(nearest)) nearest = r;
    CHECK(x == doctest::Approx(nearest).epsilon(1e-6));
}

TEST_CASE("effective parameters follow their definitions") {
    SystemParams p;
    p.g_a = p.g_b = 0.5;
    p.delta_a = 1.0;
    p.delta_b = 2.0;
    SteadyState s;
    s.alpha = Complex{1.0, 0.0};
    s.beta = Complex{0.0, 1.0};
    s.xi = Complex{0.0, 0.0};
    const EffectiveParams e = effective_params(p, s);
    CHECK(e.G_a == Complex{0.5, 0.0});
    CHECK(e.G_b == Complex{0.0, 0.5});
    CHECK(e.theta == doctest::Approx(M_PI / 2.0));
    CHECK(e.delta_a_eff == 1.0);  // xi = 0: no displacement shift
    CHECK(e.delta_b_eff == 2.0);
}

TEST_CASE("deep in the sideband-resolved regime theta tracks the drive phases") {
    SystemParams p;
    p.omega_m = 200.0;
    p.delta_a = p.delta_b = 200.0;
    p.J = 0.5;
    p.g_a = p.g_b = 1e-3;
    const DriveDesign d = design_drives(0.5, M_PI / 2.0, p);
    p.eps_a = d.eps_a;
    p.eps_b = d.eps_b;
    p.phi_a = d.phi_a;
    p.phi_b = d.phi_b;
    const SteadyState s = solve_steady_state(p);
    const EffectiveParams e = effective_params(p, s);
    CHECK(std::abs(e.theta - wrap_two_pi(p.phi_b - p.phi_a)) < 0.01);
}

TEST_CASE("drive design reproduces the closed-form amplitude scale") {
    SystemParams p;
    p.omega_m = 10.0;
    p.delta_a = p.delta_b = 10.0;
    p.J = 0.5;
    p.g_a = p.g_b = 1e-3;

    // |G| = gamma/2 at g = 1e-3 gamma, omega_m = 10 gamma: eps = 5e3 gamma
    const DriveDesign d = design_drives(0.5, 0.0, p);
    CHECK(d.eps_a == doctest::Approx(5000.0));
    CHECK(d.eps_b == d.eps_a);
    CHECK(d.phi_a == doctest::Approx(M_PI / 2.0));
    CHECK(d.phi_b == doctest::Approx(M_PI / 2.0));  // theta = 0: phases coincide

    SUBCASE("round trip recovers magnitude and phase difference") {
        SystemParams q = compensate_detunings(designed_params(0.5, M_PI / 2.0));
        const SteadyState s = solve_steady_state(q);
        const EffectiveParams e = effective_params(q, s);
        CHECK(std::abs(std::abs(e.G_a) - 0.5) / 0.5 < 0.10);
        CHECK(std::abs(e.theta - M_PI / 2.0) < 0.10);
    }
}

TEST_CASE("drive design rejects the unresolved-sideband regime") {
    SystemParams p;
    p.omega_m = 3.0;  // < 5 gamma
    p.delta_a = p.delta_b = 3.0;
    p.g_a = p.g_b = 1e-3;
    CHECK_THROWS_AS(design_drives(0.5, 0.0, p), RegimeViolation);

    SystemParams q = p;
    q.omega_m = 10.0;
    q.delta_a = q.delta_b = 2.0;  // valid regime but detunings far from omega_m
    const DriveDesign d = design_drives(0.5, 0.0, q);
    CHECK(d.warnings.size() == 2);

    SystemParams r = q;
    r.g_b = 2e-3;  // unequal couplings
    CHECK_THROWS_AS(design_drives(0.5, 0.0, r), ValidationError);
}

TEST_CASE("linearization warning triggers on small occupancies") {
    SystemParams p = designed_params(0.5, M_PI / 2.0);
    const SteadyState strong = solve_steady_state(p);
    CHECK(linearization_warnings(p, strong).empty());  // |alpha| ~ 500

    SystemParams weak = p;
    weak.eps_a = weak.eps_b = 1.0;
    const SteadyState small = solve_steady_state(weak);
    CHECK(linearization_warnings(weak, small).size() == 2);
}

TEST_CASE("parameter validation") {
    SystemParams p;
    p.gamma_a = 0.0;
    CHECK_THROWS_AS(p.validate(), ValidationError);
    p = SystemParams{};
    p.omega_m = -1.0;
    CHECK_THROWS_AS(p.validate(), ValidationError);
    p = SystemParams{};
    p.eps_a = -0.1;
    CHECK_THROWS_AS(p.validate(), ValidationError);
    p = SystemParams{};
    CHECK_THROWS_AS(solve_steady_state(p, 0.0, 100), ValidationError);
}
