#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "flexcool/bec_trap.hpp"
#include "flexcool/constants.hpp"
#include "oracles.hpp"

using namespace flexcool;
using namespace flexcool::bec_trap;
namespace c = flexcool::constants;

namespace {

double reference_mu() { return chemical_potential(reference_trap()); }

} // namespace

TEST_CASE("reference trap") {
    const auto t = reference_trap();
    CHECK(t.atom_number == 5'000'000u);
    CHECK(over_2pi(t.omega_x) == doctest::Approx(250.0));
    CHECK(over_2pi(t.omega_z) == doctest::Approx(19.0));
    CHECK(over_2pi(reference_mu_over_hbar()) == doctest::Approx(2880.0).epsilon(1e-12));
    CHECK(reference_mu() / c::hbar == doctest::Approx(reference_mu_over_hbar()).epsilon(1e-12));
}

TEST_CASE("trap validation and mode parsing") {
    CHECK_THROWS_AS(TrapParams({0.0, 1.0, 1.0, 10}).validate(), std::domain_error);
    CHECK_THROWS_AS(TrapParams({1.0, 1.0, 1.0, 0}).validate(), std::domain_error);
    CHECK(parse_mode("calibrated") == ChemicalPotentialMode::calibrated);
    CHECK(parse_mode("thomas_fermi") == ChemicalPotentialMode::thomas_fermi);
    CHECK(to_string(ChemicalPotentialMode::thomas_fermi) == "thomas_fermi");
    CHECK_THROWS_AS((void)parse_mode("bogus"), std::invalid_argument);
}

TEST_CASE("chemical potential scaling") {
    auto t = reference_trap();
    const double mu = chemical_potential(t);
    t.atom_number *= 2;
    CHECK(chemical_potential(t) / mu == doctest::Approx(std::pow(2.0, 0.4)).epsilon(1e-12));

    // μ ∝ ω̄^{6/5}: doubling every frequency multiplies μ by 2^{6/5}.
    auto s = reference_trap();
    s.omega_x *= 2.0;
    s.omega_y *= 2.0;
    s.omega_z *= 2.0;
    CHECK(chemical_potential(s) / mu == doctest::Approx(std::pow(2.0, 1.2)).epsilon(1e-12));

    for (auto mode : {ChemicalPotentialMode::calibrated, ChemicalPotentialMode::thomas_fermi}) {
        auto u = reference_trap();
        const double base = chemical_potential(u, mode);
        u.atom_number *= 32;
        CHECK(chemical_potential(u, mode) / base == doctest::Approx(4.0).epsilon(1e-12));
    }
}

TEST_CASE("Thomas-Fermi chemical potential from first principles") {
    const auto t = reference_trap();
    const double w_bar = std::cbrt(t.omega_x * t.omega_y * t.omega_z);
    const double a_ho = std::sqrt(test::kHbar / (test::kMassRb * w_bar));
    const double mu = 0.5 * test::kHbar * w_bar * std::pow(15.0 * 5e6 * 5.29e-9 / a_ho, 0.4);
    const double tf = chemical_potential(t, ChemicalPotentialMode::thomas_fermi);
    CHECK(tf == doctest::Approx(mu).epsilon(1e-9));
    CHECK(over_2pi(tf / c::hbar) == doctest::Approx(9.0e3).epsilon(0.01));
}

TEST_CASE("Thomas-Fermi radii") {
    const double mu = reference_mu();
    const auto r = tf_radii(reference_trap(), mu);
    CHECK(r[0] == doctest::Approx(3.274e-6).epsilon(1e-3));
    CHECK(r[1] == doctest::Approx(r[0]));
    CHECK(r[2] == doctest::Approx(4.308e-5).epsilon(1e-3));
    CHECK(r[2] / r[0] == doctest::Approx(250.0 / 19.0).epsilon(1e-12));
    // 2μ/(mω²) directly.
    CHECK(r[0] == doctest::Approx(std::sqrt(2.0 * mu / (test::kMassRb * std::pow(2.0 * test::kPi * 250.0, 2)))).epsilon(1e-9));
    const auto r4 = tf_radii(reference_trap(), 4.0 * mu);
    for (int i = 0; i < 3; ++i) CHECK(r4[i] == doctest::Approx(2.0 * r[i]));

    const auto cond = make_condensate(reference_trap(), ChemicalPotentialMode::calibrated);
    CHECK(cond.mu_c == doctest::Approx(mu));
    CHECK(cond.tf_radii[2] == doctest::Approx(r[2]));
}

TEST_CASE("resonance shell") {
    const double mu = reference_mu();
    const auto r = tf_radii(reference_trap(), mu);
    const auto at_zero = resonance_shell(0.0, mu, r);
    for (double v : at_zero) CHECK(v == 0.0);
    const auto at_edge = resonance_shell(mu / c::hbar, mu, r);
    for (int i = 0; i < 3; ++i) CHECK(at_edge[i] == doctest::Approx(r[i]));
    const auto third = resonance_shell(mu / (3.0 * c::hbar), mu, r);
    for (int i = 0; i < 3; ++i) CHECK(third[i] == doctest::Approx(r[i] / std::sqrt(3.0)));
    CHECK_THROWS_AS((void)resonance_shell(1.01 * mu / c::hbar, mu, r), std::domain_error);
    CHECK_THROWS_AS((void)resonance_shell(-1.0, mu, r), std::domain_error);

    CHECK(in_resonance_shell(0.5 * mu / c::hbar, mu));
    CHECK_FALSE(in_resonance_shell(1.5 * mu / c::hbar, mu));
    CHECK(detuning_ratio(mu / (3.0 * c::hbar), mu) == doctest::Approx(1.0 / 3.0));

    double prev = -1.0;
    for (int i = 0; i <= 100; ++i) {
        const double x = i / 100.0;
        const double rx = resonance_shell(x * mu / c::hbar, mu, r)[0];
        CHECK(rx >= prev);
        prev = rx;
    }
}

TEST_CASE("Franck-Condon factor zeta") {
    const double mu = reference_mu();
    auto z = [&](double x) { return zeta(x * mu / c::hbar, mu); };

    CHECK(z(0.0) == 0.0);
    CHECK(std::abs(z(1.0)) < 1e-20);
    CHECK(z(1.5) == 0.0);
    CHECK(z(-0.5) == 0.0);
    CHECK_THROWS_AS((void)zeta_strict(1.5 * mu / c::hbar, mu), std::domain_error);

    CHECK(zeta_prefactor(mu) == doctest::Approx(3.3e-4).epsilon(0.02));
    CHECK(zeta_prefactor(mu) == doctest::Approx(15.0 * test::kPi / (8.0 * 2.0 * test::kPi * 2880.0)).epsilon(1e-9));
    CHECK(z(1.0 / 3.0) == doctest::Approx(1.253e-4).epsilon(1e-3));

    const double x_star = test::golden_section_max(z, 0.0, 1.0, 1e-10);
    CHECK(x_star == doctest::Approx(1.0 / 3.0).epsilon(1e-7));

    for (int i = 1; i < 100; ++i) {
        const double x = i / 100.0;
        CHECK(z(x) > 0.0);
        CHECK(z(x) <= z(1.0 / 3.0));
    }
}

TEST_CASE("transition rate") {
    const double mu = reference_mu();
    const double d = mu / (3.0 * c::hbar);
    CHECK(transition_rate(d, mu, 0.0) == 0.0);
    CHECK(transition_rate(d, mu, 5.13e3) == doctest::Approx(3.3e3).epsilon(0.01));

    test::Draw draw(11);
    for (int i = 0; i < 10000; ++i) {
        const double x = draw.uniform(0.0, 1.0);
        const double rabi = draw.log_uniform(1.0, 1e6);
        const double gamma = transition_rate(x * mu / c::hbar, mu, rabi);
        CHECK(gamma / (rabi * rabi) == doctest::Approx(zeta(x * mu / c::hbar, mu)).epsilon(1e-13));
        CHECK(gamma >= 0.0);
    }
}
