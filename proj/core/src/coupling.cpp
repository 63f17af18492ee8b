#include "flexcool/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "flexcool/constants.hpp"
#include "flexcool/cooling_model.hpp"

namespace flexcool::coupling {

namespace c = flexcool::constants;

namespace {

constexpr double kSqrt8 = 2.8284271247461903;

bool positive_finite(double v) { return v > 0.0 && std::isfinite(v); }

} // namespace

void MagneticTip::validate() const {
    if (!positive_finite(moment)) throw std::domain_error("MagneticTip: moment must be > 0");
    if (!positive_finite(distance_d0)) throw std::domain_error("MagneticTip: d0 must be > 0");
}

void OscillatorParams::validate() const {
    if (!positive_finite(omega_m)) throw std::domain_error("OscillatorParams: omega_m must be > 0");
    if (!positive_finite(quality_Q)) throw std::domain_error("OscillatorParams: Q must be > 0");
    if (!positive_finite(m_eff)) throw std::domain_error("OscillatorParams: m_eff must be > 0");
    if (!(temperature_T >= 0.0) || !std::isfinite(temperature_T)) {
        throw std::domain_error("OscillatorParams: temperature must be >= 0");
    }
    if (amplitude_beta && !(*amplitude_beta >= 0.0)) {
        throw std::domain_error("OscillatorParams: beta must be >= 0");
    }
}

double dipole_gradient(const MagneticTip& tip) {
    tip.validate();
    const double d2 = tip.distance_d0 * tip.distance_d0;
    return 3.0 * c::mu_0 * tip.moment / (4.0 * c::pi * d2 * d2);
}

double zero_point_amplitude(double omega_m, double m_eff) {
    if (!positive_finite(omega_m) || !positive_finite(m_eff)) {
        throw std::domain_error("zero_point_amplitude: omega_m and m_eff must be > 0");
    }
    return std::sqrt(c::hbar / (2.0 * m_eff * omega_m));
}

double zero_point_amplitude(const OscillatorParams& osc) {
    return zero_point_amplitude(osc.omega_m, osc.m_eff);
}

double single_atom_coupling(double gradient, double a_qm) {
    if (!(gradient >= 0.0) || !(a_qm >= 0.0)) {
        throw std::domain_error("single_atom_coupling: inputs must be >= 0");
    }
    return c::mu_B * gradient * a_qm / (kSqrt8 * c::hbar);
}

double gradient_for_coupling(double g0, double a_qm) {
    if (!(g0 >= 0.0) || !positive_finite(a_qm)) {
        throw std::domain_error("gradient_for_coupling: g0 >= 0 and a_qm > 0 required");
    }
    return g0 * kSqrt8 * c::hbar / (c::mu_B * a_qm);
}

double collective_coupling(double g0, std::uint64_t atom_number) {
    if (atom_number == 0) {
        throw std::domain_error("collective_coupling: N = 0 leaves no cooling channel");
    }
    return g0 * std::sqrt(static_cast<double>(atom_number));
}

double thermal_amplitude(const OscillatorParams& osc) {
    const double a_qm = zero_point_amplitude(osc);
    const double n_th = cooling_model::thermal_phonon_number(osc.omega_m, osc.temperature_T);
    return std::max(2.0 * a_qm * std::sqrt(n_th), a_qm);
}

double thermal_rms_amplitude(const OscillatorParams& osc) {
    const double a_qm = zero_point_amplitude(osc);
    const double n_th = cooling_model::thermal_phonon_number(osc.omega_m, osc.temperature_T);
    return a_qm * std::sqrt(2.0 * n_th + 1.0);
}

double rabi_frequency(double gradient, double amplitude) {
    if (!(gradient >= 0.0) || !(amplitude >= 0.0)) {
        throw std::domain_error("rabi_frequency: inputs must be >= 0");
    }
    return c::mu_B * gradient * amplitude / (kSqrt8 * c::hbar);
}

double interaction_time(double rabi) {
    if (!positive_finite(rabi)) {
        throw std::domain_error("interaction_time: Rabi frequency must be > 0");
    }
    return c::pi / rabi;
}

ValidityReport validity_report(double g0, double tau, double beta,
                               std::optional<double> distance_d0, double bias_field) {
    ValidityReport report;

    report.small_angle.name = "g0*tau/2 < 1";
    report.small_angle.ratio = 0.5 * g0 * tau;
    report.small_angle.threshold = 1.0;
    report.small_angle.pass = report.small_angle.ratio < 1.0;

    report.small_amplitude.name = "beta/d0 < 0.01";
    report.small_amplitude.threshold = 0.01;
    if (distance_d0 && *distance_d0 > 0.0) {
        report.small_amplitude.ratio = beta / *distance_d0;
        report.small_amplitude.pass = report.small_amplitude.ratio < 0.01;
    } else {
        report.small_amplitude.ratio = std::numeric_limits<double>::quiet_NaN();
        report.small_amplitude.evaluated = false;
        report.small_amplitude.pass = true;
    }

    report.weak_field.name = "B/B_hf < 0.1";
    report.weak_field.ratio = bias_field / c::B_hf;
    report.weak_field.threshold = 0.1;
    report.weak_field.pass = report.weak_field.ratio < 0.1;

    return report;
}

} // namespace flexcool::coupling
