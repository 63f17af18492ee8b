#include "flexcool/hyperfine.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "flexcool/constants.hpp"

namespace flexcool::hyperfine {

namespace c = flexcool::constants;

void HyperfineState::validate() const {
    if (F != 1 && F != 2) {
        throw std::domain_error("hyperfine: F must be 1 or 2, got " + std::to_string(F));
    }
    if (std::abs(mF) > F) {
        throw std::domain_error("hyperfine: |mF| > F for F=" + std::to_string(F) +
                                ", mF=" + std::to_string(mF));
    }
}

bool HyperfineState::trappable() const {
    validate();
    return (F == 2 && mF >= 0) || (F == 1 && mF == -1);
}

StaticField::StaticField(double b) : tesla(b) {
    if (!(b >= 0.0) || !std::isfinite(b)) {
        throw std::domain_error("hyperfine: static field must be finite and >= 0");
    }
}

bool StaticField::weak_field() const { return tesla < 0.1 * c::B_hf; }

double lande_gF(int F) {
    if (F != 1 && F != 2) {
        throw std::domain_error("lande_gF: F must be 1 or 2");
    }
    const double f = F;
    const double j = c::electron_J;
    const double i = c::nuclear_spin_I;
    return c::g_J * (f * (f + 1.0) + j * (j + 1.0) - i * (i + 1.0)) / (2.0 * f * (f + 1.0));
}

double zeeman_energy(const HyperfineState& state, const StaticField& field) {
    state.validate();
    const double x = field.tesla / c::B_hf;
    const double radicand = 1.0 + state.mF * x + x * x;
    if (radicand < 0.0) {
        throw std::domain_error("zeeman_energy: negative radicand");
    }
    const double sign = (state.F % 2 == 0) ? 1.0 : -1.0;
    return sign * 0.5 * c::A_hf * c::h * std::sqrt(radicand);
}

double larmor_frequency(const StaticField& field) {
    return c::mu_B * std::abs(lande_gF(1)) * field.tesla / c::hbar;
}

double field_for_larmor(double omega_L) {
    if (!(omega_L >= 0.0)) {
        throw std::domain_error("field_for_larmor: omega_L must be >= 0");
    }
    return c::hbar * omega_L / (c::mu_B * std::abs(lande_gF(1)));
}

double exact_transition_frequency(const StaticField& field) {
    return (zeeman_energy(liquid_state, field) - zeeman_energy(vapor_state, field)) / c::hbar;
}

} // namespace flexcool::hyperfine
