#pragma once

// Condensate side of the cooling channel: harmonic trap, chemical potential,
// Thomas-Fermi radii, the resonance shell and the out-coupling rate
//   Γ(δ) = ζ(δ) Ω_R²,   ζ(δ) = (15πħ / 8μ_c) (√x − x^{3/2}),   x = ħδ/μ_c.

#include <array>
#include <cstdint>
#include <string_view>

namespace flexcool::bec_trap {

struct TrapParams {
    double omega_x{0.0};  // [rad/s]
    double omega_y{0.0};
    double omega_z{0.0};
    std::uint64_t atom_number{0};

    void validate() const;
};

enum class ChemicalPotentialMode {
    calibrated,    // power law anchored at μ_c/ħ = 2π·2.88 kHz for the reference trap
    thomas_fermi,  // μ_c = (ħω̄/2)(15 N a_s / ā)^{2/5}
};

[[nodiscard]] std::string_view to_string(ChemicalPotentialMode mode);
/// Throws std::invalid_argument for unknown names.
[[nodiscard]] ChemicalPotentialMode parse_mode(std::string_view name);

using Radii = std::array<double, 3>;

struct CondensateModel {
    double mu_c{0.0};  // [J]
    ChemicalPotentialMode mode{ChemicalPotentialMode::calibrated};
    Radii tf_radii{};  // [m]
};

/// N = 5×10⁶ atoms in a 2π×{250, 250, 19} Hz trap.
[[nodiscard]] TrapParams reference_trap();

/// μ_c/ħ of the reference trap in calibrated mode [rad/s].
[[nodiscard]] double reference_mu_over_hbar();

[[nodiscard]] double chemical_potential(const TrapParams& trap,
                                        ChemicalPotentialMode mode = ChemicalPotentialMode::calibrated);

/// R_i = sqrt(2μ_c / (m ω_i²)).
[[nodiscard]] Radii tf_radii(const TrapParams& trap, double mu_c);

[[nodiscard]] CondensateModel make_condensate(const TrapParams& trap, ChemicalPotentialMode mode);

/// ħδ/μ_c.
[[nodiscard]] double detuning_ratio(double delta, double mu_c);

/// True when 0 ≤ ħδ/μ_c ≤ 1.
[[nodiscard]] bool in_resonance_shell(double delta, double mu_c);

/// r_i = R_i sqrt(ħδ/μ_c); throws std::domain_error outside the condensate.
[[nodiscard]] Radii resonance_shell(double delta, double mu_c, const Radii& radii);

/// ζ(δ) [s]; zero outside the resonance window.
[[nodiscard]] double zeta(double delta, double mu_c);

/// As zeta, but throws std::domain_error outside 0 ≤ ħδ/μ_c ≤ 1.
[[nodiscard]] double zeta_strict(double delta, double mu_c);

/// 15πħ / (8μ_c) [s].
[[nodiscard]] double zeta_prefactor(double mu_c);

/// Γ = ζ(δ) Ω_R² [1/s].
[[nodiscard]] double transition_rate(double delta, double mu_c, double rabi);

} // namespace flexcool::bec_trap
