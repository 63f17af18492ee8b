#pragma once

// Rb-87 ground-state hyperfine Zeeman structure and Larmor tuning.
//
// Energies follow the two-manifold Breit-Rabi expression
//   E(F, mF) = (−1)^F (A_hf h / 2) sqrt(1 + mF x + x²),   x = B / B_hf,
// with the zero of energy at the mean of the F=1 and F=2 zero-field levels.
// All angular frequencies are rad/s.

#include <array>

namespace flexcool::hyperfine {

struct HyperfineState {
    int F{1};
    int mF{-1};

    /// Throws std::domain_error unless F ∈ {1,2} and |mF| ≤ F.
    void validate() const;

    /// Low-field seekers held by a pure magnetic trap: |2,2⟩, |2,1⟩, |2,0⟩, |1,−1⟩.
    [[nodiscard]] bool trappable() const;

    friend constexpr bool operator==(const HyperfineState&, const HyperfineState&) = default;
};

/// The eight ground-state sublevels, F=2 first, mF descending.
inline constexpr std::array<HyperfineState, 8> all_states{{
    {2, 2}, {2, 1}, {2, 0}, {2, -1}, {2, -2},
    {1, 1}, {1, 0}, {1, -1},
}};

/// Cold atoms start here ("liquid" state, trapped).
inline constexpr HyperfineState liquid_state{1, -1};
/// Spin-flipped, untrapped ("vapor") state.
inline constexpr HyperfineState vapor_state{1, 0};

struct StaticField {
    double tesla{0.0};

    explicit StaticField(double b);

    /// B < 0.1·B_hf.
    [[nodiscard]] bool weak_field() const;
};

[[nodiscard]] double lande_gF(int F);

/// Zeeman-shifted level energy [J].
[[nodiscard]] double zeeman_energy(const HyperfineState& state, const StaticField& field);

/// First-order Larmor frequency of |1,−1⟩ ↔ |1,0⟩: μ_B |g_F| B / ħ.
[[nodiscard]] double larmor_frequency(const StaticField& field);

/// Inverse of larmor_frequency [T].
[[nodiscard]] double field_for_larmor(double omega_L);

/// (E_|1,−1⟩ − E_|1,0⟩)/ħ from the full level formula [rad/s].
[[nodiscard]] double exact_transition_frequency(const StaticField& field);

} // namespace flexcool::hyperfine
