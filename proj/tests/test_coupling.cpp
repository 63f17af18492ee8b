#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "flexcool/constants.hpp"
#include "flexcool/coupling.hpp"
#include "oracles.hpp"

using namespace flexcool;
using namespace flexcool::coupling;
namespace c = flexcool::constants;

namespace {

OscillatorParams baseline_osc() {
    return OscillatorParams{angular(1e6), 1e5, 1e-16, 0.050, 0.0, std::nullopt};
}

} // namespace

TEST_CASE("dipole gradient scaling") {
    const MagneticTip tip{2.96e-15, 1e-6};
    const double g = dipole_gradient(tip);
    // 3μ₀μ/(4πd⁴) with μ₀/4π = 1e-7 to the precision of the stored μ₀.
    CHECK(g == doctest::Approx(3e-7 * 2.96e-15 / 1e-24).epsilon(1e-9));
    CHECK(dipole_gradient({tip.moment, 2.0 * tip.distance_d0}) == doctest::Approx(g / 16.0).epsilon(1e-14));
    CHECK(dipole_gradient({2.0 * tip.moment, tip.distance_d0}) == doctest::Approx(2.0 * g).epsilon(1e-14));
    CHECK_THROWS_AS((void)dipole_gradient({1e-15, 0.0}), std::domain_error);
    CHECK_THROWS_AS((void)dipole_gradient({-1e-15, 1e-6}), std::domain_error);
}

TEST_CASE("zero-point amplitude") {
    const double a = zero_point_amplitude(baseline_osc());
    CHECK(a == doctest::Approx(std::sqrt(test::kHbar / (2.0 * 1e-16 * 2.0 * test::kPi * 1e6))).epsilon(1e-12));
    CHECK(a == doctest::Approx(2.9e-13).epsilon(0.01));
    CHECK(zero_point_amplitude(angular(1e6), 4e-16) == doctest::Approx(a / 2.0).epsilon(1e-14));
    CHECK(zero_point_amplitude(angular(1e3), 1e-16) == doctest::Approx(9.1608e-12).epsilon(1e-4));
    CHECK_THROWS_AS((void)zero_point_amplitude(0.0, 1e-16), std::domain_error);
    CHECK_THROWS_AS((void)zero_point_amplitude(1.0, 0.0), std::domain_error);
}

TEST_CASE("single-atom coupling") {
    const double a = 2.9e-13;
    const double grad = gradient_for_coupling(8.0, a);
    CHECK(single_atom_coupling(grad, a) == doctest::Approx(8.0).epsilon(1e-14));
    // g₀ = μ_B G a /(√8 ħ) evaluated with the test constants.
    CHECK(single_atom_coupling(888.0, 2.897e-13) ==
          doctest::Approx(test::kMuB * 888.0 * 2.897e-13 / (std::sqrt(8.0) * test::kHbar)).epsilon(1e-9));
    CHECK(single_atom_coupling(888.0, 2.897e-13) == doctest::Approx(8.0).epsilon(1e-3));
    CHECK(single_atom_coupling(0.0, a) == 0.0);
    CHECK(single_atom_coupling(2.0 * grad, a) == doctest::Approx(16.0));
    CHECK(single_atom_coupling(grad, 3.0 * a) == doctest::Approx(24.0));

    SUBCASE("tip chain is invariant under mu -> 16 mu, d0 -> 2 d0") {
        const MagneticTip t1{2.96e-15, 1e-6};
        const MagneticTip t2{16.0 * 2.96e-15, 2e-6};
        CHECK(single_atom_coupling(dipole_gradient(t1), a) ==
              doctest::Approx(single_atom_coupling(dipole_gradient(t2), a)).epsilon(1e-14));
    }
}

TEST_CASE("collective coupling") {
    CHECK(collective_coupling(8.0, 1) == 8.0);
    CHECK(collective_coupling(8.0, 4) == doctest::Approx(16.0));
    CHECK(collective_coupling(8.0, 5'000'000) == doctest::Approx(1.789e4).epsilon(1e-3));
    CHECK(collective_coupling(8.0, 5'000'000) == doctest::Approx(17888.543819998).epsilon(1e-11));
    CHECK_THROWS_AS((void)collective_coupling(8.0, 0), std::domain_error);
}

TEST_CASE("thermal amplitude") {
    auto osc = baseline_osc();
    const double a = zero_point_amplitude(osc);
    const double n = test::bose_mean_by_summation(osc.omega_m, 0.050);
    CHECK(thermal_amplitude(osc) == doctest::Approx(2.0 * a * std::sqrt(n)).epsilon(1e-9));
    // Frozen from the formula; the literature figure for this case is ten times larger.
    CHECK(thermal_amplitude(osc) == doctest::Approx(1.8696e-11).epsilon(1e-4));

    osc.temperature_T = 0.0;
    CHECK(thermal_amplitude(osc) == doctest::Approx(a));
    CHECK(thermal_rms_amplitude(osc) == doctest::Approx(a));

    osc.temperature_T = 0.050;
    const double low = thermal_amplitude(osc);
    osc.temperature_T = 0.200;
    CHECK(thermal_amplitude(osc) / low == doctest::Approx(2.0).epsilon(1e-3));

    osc.amplitude_beta = 1e-9;
    CHECK(thermal_amplitude(osc) == doctest::Approx(2.0 * a * std::sqrt(test::bose_mean_by_summation(osc.omega_m, 0.200))).epsilon(1e-9));
}

TEST_CASE("Rabi frequency and interaction time") {
    const double a = 2.897e-13;
    const double grad = gradient_for_coupling(8.0, a);
    CHECK(rabi_frequency(grad, a) == doctest::Approx(8.0));
    CHECK(rabi_frequency(grad, 1.86e-10) == doctest::Approx(5.13e3).epsilon(0.01));
    CHECK(rabi_frequency(grad, 2.0 * 1.86e-10) == doctest::Approx(2.0 * rabi_frequency(grad, 1.86e-10)));

    CHECK(interaction_time(c::pi) == doctest::Approx(1.0));
    CHECK(interaction_time(5.13e3) == doctest::Approx(6.12e-4).epsilon(0.01));
    CHECK_THROWS_AS((void)interaction_time(0.0), std::domain_error);

    test::Draw draw(7);
    for (int i = 0; i < 10000; ++i) {
        const double rabi = draw.log_uniform(1e-3, 1e9);
        CHECK(interaction_time(rabi) * rabi == doctest::Approx(c::pi).epsilon(1e-14));
    }
}

TEST_CASE("validity report") {
    SUBCASE("baseline chain passes") {
        const auto r = validity_report(8.0, 6.0846e-3, 1.8696e-11, std::nullopt, 1.43e-4);
        CHECK(r.small_angle.ratio == doctest::Approx(0.02434).epsilon(1e-3));
        CHECK(r.small_angle.pass);
        CHECK_FALSE(r.small_amplitude.evaluated);
        CHECK(r.small_amplitude.pass);
        CHECK(r.weak_field.ratio == doctest::Approx(1.43e-4 / c::B_hf));
        CHECK(r.all_pass());
    }
    SUBCASE("large coupling fails small angle") {
        const auto r = validity_report(1e4, 6.12e-4, 1e-11, std::nullopt, 1.43e-4);
        CHECK(r.small_angle.ratio == doctest::Approx(3.06).epsilon(1e-3));
        CHECK_FALSE(r.small_angle.pass);
        CHECK_FALSE(r.all_pass());
    }
    SUBCASE("amplitude check with a known distance") {
        CHECK(validity_report(8.0, 1e-3, 1e-9, 1e-6, 1e-4).small_amplitude.pass);
        const auto r = validity_report(8.0, 1e-3, 2e-8, 1e-6, 1e-4);
        CHECK(r.small_amplitude.evaluated);
        CHECK(r.small_amplitude.ratio == doctest::Approx(0.02));
        CHECK_FALSE(r.small_amplitude.pass);
    }
    SUBCASE("strong bias field fails weak-field check") {
        CHECK_FALSE(validity_report(8.0, 1e-3, 1e-11, std::nullopt, c::B_hf).weak_field.pass);
        CHECK_FALSE(validity_report(8.0, 1e-3, 1e-11, std::nullopt, 0.5 * c::B_hf).all_pass());
    }
}
