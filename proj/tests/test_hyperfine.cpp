#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "flexcool/constants.hpp"
#include "flexcool/hyperfine.hpp"
#include "oracles.hpp"

using namespace flexcool;
using namespace flexcool::hyperfine;
namespace c = flexcool::constants;

TEST_CASE("physical constants") {
    CHECK(c::B_hf_nominal == doctest::Approx(0.2444).epsilon(1e-3));
    // Stored crossover field stays within 1 % of A_hf·h/(2μ_B).
    CHECK(std::abs(c::B_hf / c::B_hf_nominal - 1.0) < 0.01);
    for (double v : {c::hbar, c::h, c::k_B, c::mu_B, c::mu_0, c::m_Rb87, c::A_hf, c::B_hf, c::g_J}) {
        CHECK(v > 0.0);
    }
}

TEST_CASE("Landé g-factor") {
    CHECK(lande_gF(1) == doctest::Approx(-c::g_J / 4.0).epsilon(1e-15));
    CHECK(lande_gF(1) == doctest::Approx(-0.50058).epsilon(1e-5));
    CHECK(lande_gF(2) == doctest::Approx(0.50058).epsilon(1e-5));
    CHECK(std::abs(lande_gF(1)) == std::abs(lande_gF(2)));
    CHECK_THROWS_AS((void)lande_gF(0), std::domain_error);
    CHECK_THROWS_AS((void)lande_gF(3), std::domain_error);
}

TEST_CASE("hyperfine state validity and trappability") {
    CHECK_THROWS_AS(HyperfineState({1, 2}).validate(), std::domain_error);
    CHECK_THROWS_AS(HyperfineState({3, 0}).validate(), std::domain_error);

    int trapped = 0;
    for (const auto& s : all_states) {
        const bool expected = (s == HyperfineState{2, 2}) || (s == HyperfineState{2, 1}) ||
                              (s == HyperfineState{2, 0}) || (s == HyperfineState{1, -1});
        CHECK(s.trappable() == expected);
        trapped += s.trappable();
    }
    CHECK(trapped == 4);
    CHECK(liquid_state.trappable());
    CHECK_FALSE(vapor_state.trappable());
}

TEST_CASE("static field") {
    CHECK_THROWS_AS(StaticField(-1e-3), std::domain_error);
    CHECK(StaticField(0.0).weak_field());
    CHECK_FALSE(StaticField(0.1 * c::B_hf).weak_field());
}

TEST_CASE("Zeeman energies") {
    SUBCASE("zero field") {
        for (const auto& s : all_states) {
            const double e = zeeman_energy(s, StaticField(0.0));
            CHECK(e == doctest::Approx((s.F == 1 ? -1.0 : 1.0) * c::A_hf * c::h / 2.0).epsilon(1e-15));
        }
        CHECK(zeeman_energy({1, 0}, StaticField(0.0)) / c::h == doctest::Approx(-3.4175e9).epsilon(1e-12));
    }
    SUBCASE("crossover field") {
        const double e = zeeman_energy({2, 0}, StaticField(c::B_hf));
        CHECK(e == doctest::Approx(c::A_hf * c::h / 2.0 * std::sqrt(2.0)).epsilon(1e-14));
    }
    SUBCASE("low-field slope of |1,-1> matches mu_B |g_F|") {
        auto energy = [](double b) { return zeeman_energy(liquid_state, StaticField(b)); };
        const double slope = test::central_difference(energy, 2e-8, 1e-8);
        CHECK(slope == doctest::Approx(c::mu_B * std::abs(lande_gF(1))).epsilon(1e-6));
        CHECK(slope > 0.0);
    }
    SUBCASE("monotone in mF within each manifold") {
        for (double b : {1e-4, 1e-2, 0.1, 0.3}) {
            const StaticField f(b);
            for (int m = -2; m < 2; ++m) CHECK(zeeman_energy({2, m}, f) < zeeman_energy({2, m + 1}, f));
            for (int m = -1; m < 1; ++m) CHECK(zeeman_energy({1, m}, f) > zeeman_energy({1, m + 1}, f));
        }
    }
}

TEST_CASE("Larmor frequency and its inverse") {
    CHECK(larmor_frequency(StaticField(0.0)) == 0.0);
    // ω_L = μ_B |g_F| B / ħ inverted by hand for 1 MHz: B = h·10⁶ / (μ_B·g_J/4).
    const double b_1mhz = test::kH * 1e6 / (test::kMuB * 2.002319 / 4.0);
    CHECK(b_1mhz == doctest::Approx(1.4273e-4).epsilon(1e-4));
    CHECK(over_2pi(larmor_frequency(StaticField(1.4286e-4))) == doctest::Approx(1.00e6).epsilon(2e-3));
    CHECK(field_for_larmor(angular(1e6)) == doctest::Approx(b_1mhz).epsilon(1e-12));
    CHECK(field_for_larmor(0.0) == 0.0);
    CHECK(larmor_frequency(StaticField(2e-4)) == doctest::Approx(2.0 * larmor_frequency(StaticField(1e-4))));
    CHECK(field_for_larmor(larmor_frequency(StaticField(1e-4))) == doctest::Approx(1e-4).epsilon(1e-12));
    CHECK_THROWS_AS((void)field_for_larmor(-1.0), std::domain_error);
}

TEST_CASE("exact |1,-1> <-> |1,0> splitting") {
    CHECK(exact_transition_frequency(StaticField(0.0)) == 0.0);
    const StaticField b(1.43e-4);
    CHECK(std::abs(exact_transition_frequency(b) / larmor_frequency(b) - 1.0) < 5e-4);

    // Monotone on [0, 0.1 B_hf] and within the first-order bound B/B_hf.
    double prev = -1.0;
    for (int i = 0; i <= 1000; ++i) {
        const double field = 0.1 * c::B_hf * i / 1000.0;
        const double exact = exact_transition_frequency(StaticField(field));
        CHECK(exact > prev);
        prev = exact;
        if (i > 0) {
            const double linear = larmor_frequency(StaticField(field));
            CHECK(std::abs(exact - linear) / linear <= field / c::B_hf);
        }
    }
}
