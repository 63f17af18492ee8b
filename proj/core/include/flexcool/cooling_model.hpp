#pragma once

// Closed-form steady state of the oscillator mode under BEC out-coupling:
//
//   ⟨n⟩ₛ = n_th / (1 + g_N² τ² Γ / (8κ))
//        = n_th / (1 + (πμ_B/8ħ)² N ζ(δ) (G_m a_qm)² Q/ω_m),
//
// the second form following from τ²Γ = π²ζ(δ). Both forms are evaluated and
// reported so callers can compare them.

#include <optional>
#include <variant>

#include "flexcool/bec_trap.hpp"
#include "flexcool/coupling.hpp"

namespace flexcool::cooling_model {

using coupling::MagneticTip;
using coupling::OscillatorParams;
using bec_trap::TrapParams;

/// Tip field gradient given directly [T/m].
struct FieldGradient {
    double tesla_per_m{0.0};
};

/// Single-atom coupling given directly [rad/s]; the gradient is inferred from a_qm.
struct CouplingRate {
    double g0{0.0};
};

using CouplingSource = std::variant<MagneticTip, FieldGradient, CouplingRate>;

struct HybridParams {
    OscillatorParams osc;
    CouplingSource coupling{CouplingRate{8.0}};
    TrapParams trap;
    double mu_c{0.0};            // [J]
    double detuning_delta{0.0};  // δ = ω_m − ω_L [rad/s]
    std::optional<double> bias_field;  // [T]; defaults to the resonance field

    void validate() const;
};

/// The cantilever + Rb-87 baseline: ω_m/2π = 1 MHz, Q = 10⁵, m_eff = 10⁻¹⁶ kg,
/// T = 50 mK, g₀ = 8 rad/s, N = 5×10⁶, μ_c/ħ = 2π·2.88 kHz, ħδ/μ_c = 1/3.
[[nodiscard]] HybridParams reference_baseline();

struct QfCriterion {
    double product{0.0};  // Q·f [Hz]
    double bound{0.0};    // k_B T / h [Hz]
    bool pass{false};
};

struct SteadyStateResult {
    double n_th{0.0};
    double n_steady{0.0};        // direct closed form
    double n_steady_chain{0.0};  // via g_N, τ, Γ, κ
    double cooling_factor{0.0};
    double kappa{0.0};
    double g0{0.0};
    double gN{0.0};
    double tau{0.0};
    double gamma{0.0};
    double rabi{0.0};
    double zeta{0.0};
    double a_qm{0.0};
    double gradient{0.0};
    double thermal_amplitude{0.0};
    double detuning_x{0.0};
    double bias_field{0.0};
    coupling::ValidityReport validity;
};

/// Bose occupancy 1/(exp(ħω/k_B T) − 1); zero at T = 0.
[[nodiscard]] double thermal_phonon_number(double omega, double temperature);

/// κ = ω/Q [1/s].
[[nodiscard]] double decay_rate(double omega, double quality_Q);

/// n_th / (1 + g²τ²Γ/(8κ)); pass g = g₀ for a single atom or g_N for the ensemble.
[[nodiscard]] double steady_phonon_basic(double n_th, double g, double tau, double gamma, double kappa);

/// Tip field gradient implied by the coupling source [T/m].
[[nodiscard]] double field_gradient(const HybridParams& params);

/// g₀ for the parameter set [rad/s].
[[nodiscard]] double single_atom_coupling(const HybridParams& params);

/// g₀, g_N, Ω_R, τ for the parameter set.
[[nodiscard]] coupling::CouplingChain coupling_chain(const HybridParams& params);

/// Bias field that tunes ω_L = ω_m − δ, unless overridden [T].
[[nodiscard]] double bias_field(const HybridParams& params);

/// (πμ_B/8ħ)² N ζ(δ) (G_m a_qm)² Q/ω_m; independent of temperature.
[[nodiscard]] double cooling_factor(const HybridParams& params);

/// Requires 0 < ħδ/μ_c < 1 (std::domain_error otherwise).
[[nodiscard]] SteadyStateResult steady_phonon_full(const HybridParams& params);

/// δ* = μ_c / (3ħ), the maximum of ζ.
[[nodiscard]] double optimal_detuning(double mu_c);

/// Largest initial temperature with ⟨n⟩ₛ ≤ 1, by bisection to 1 nK. The
/// temperature stored in params is ignored.
[[nodiscard]] double ground_state_threshold_temperature(const HybridParams& params);

/// Q·f > k_B T / h (strict).
[[nodiscard]] QfCriterion qf_quantum_criterion(double omega, double quality_Q, double temperature);

/// Moves the oscillator to (ω_new, Q_new) with m_eff, G_m, N, μ_c and δ held
/// fixed, so a_qm and g₀ scale as ω^{−1/2}.
[[nodiscard]] HybridParams rescale_oscillator(const HybridParams& params, double omega_new, double q_new);

[[nodiscard]] coupling::ValidityReport validity_report(const HybridParams& params);

} // namespace flexcool::cooling_model
