#pragma once

// Magneto-mechanical coupling chain: tip gradient → zero-point amplitude →
// single-atom coupling g₀ → collective g_N, plus the thermally driven Rabi
// frequency and the half-cycle interaction time.

#include <cstdint>
#include <optional>
#include <string>

namespace flexcool::coupling {

/// Point-dipole magnet on the oscillator's free end.
struct MagneticTip {
    double moment{0.0};       // |μ_m| [A·m²]
    double distance_d0{0.0};  // trap centre to tip [m]

    void validate() const;
};

struct OscillatorParams {
    double omega_m{0.0};        // [rad/s]
    double quality_Q{0.0};
    double m_eff{0.0};          // [kg]
    double temperature_T{0.0};  // [K]
    double phase_phi_m{0.0};    // [rad], carried only
    std::optional<double> amplitude_beta;  // [m], validity diagnostics only

    void validate() const;
};

struct CouplingChain {
    double gradient_Gm{0.0};  // [T/m]
    double a_qm{0.0};         // [m]
    double g0{0.0};           // [rad/s]
    double gN{0.0};           // [rad/s]
    double rabi_Omega{0.0};   // [rad/s]
    double tau{0.0};          // [s]
};

struct ValidityCheck {
    std::string name;
    double ratio{0.0};
    double threshold{0.0};
    bool evaluated{true};  // false when an input (e.g. d₀) is not known
    bool pass{true};
};

struct ValidityReport {
    ValidityCheck small_angle;     // g₀τ/2 < 1
    ValidityCheck small_amplitude; // β/d₀ < 0.01
    ValidityCheck weak_field;      // B/B_hf < 0.1

    [[nodiscard]] bool all_pass() const {
        return small_angle.pass && small_amplitude.pass && weak_field.pass;
    }
};

/// G_m = 3μ₀|μ_m| / (4π d₀⁴) [T/m].
[[nodiscard]] double dipole_gradient(const MagneticTip& tip);

/// a_qm = sqrt(ħ / (2 m_eff ω_m)) [m].
[[nodiscard]] double zero_point_amplitude(const OscillatorParams& osc);
[[nodiscard]] double zero_point_amplitude(double omega_m, double m_eff);

/// g₀ = μ_B G_m a_qm / (√8 ħ) [rad/s].
[[nodiscard]] double single_atom_coupling(double gradient, double a_qm);

/// Gradient that produces coupling g₀ at zero-point amplitude a_qm.
[[nodiscard]] double gradient_for_coupling(double g0, double a_qm);

/// g_N = g₀ √N; throws std::domain_error for N = 0.
[[nodiscard]] double collective_coupling(double g0, std::uint64_t atom_number);

/// Thermal displacement amplitude 2·a_qm·sqrt(n_th), floored at a_qm [m].
[[nodiscard]] double thermal_amplitude(const OscillatorParams& osc);

/// rms displacement a_qm·sqrt(2 n_th + 1) [m]; → sqrt(k_B T/(m ω²)) classically.
[[nodiscard]] double thermal_rms_amplitude(const OscillatorParams& osc);

/// Ω_R = μ_B G_m · amplitude / (√8 ħ) [rad/s].
[[nodiscard]] double rabi_frequency(double gradient, double amplitude);

/// τ = π / Ω_R [s]; throws std::domain_error for Ω_R ≤ 0.
[[nodiscard]] double interaction_time(double rabi);

/// Evaluates the three regime checks. A missing d₀ marks the amplitude
/// check as not evaluated (and passing).
[[nodiscard]] ValidityReport validity_report(double g0, double tau, double beta,
                                             std::optional<double> distance_d0,
                                             double bias_field);

} // namespace flexcool::coupling
