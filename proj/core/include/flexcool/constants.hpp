#pragma once

/**
 * @file   constants.hpp
 * @brief  Physical constants and Rb-87 atomic data in SI units.
 *
 * Exact SI-2019 values for h, k_B; CODATA 2018 for mu_B, mu_0.
 * The hyperfine splitting is kept at 6.835 GHz so that level diagrams
 * reproduce the usual textbook scale.
 */

#include <numbers>

namespace flexcool::constants {

inline constexpr double pi = std::numbers::pi_v<double>;

/** h: Planck constant [J·s]. */
inline constexpr double h = 6.626'070'15e-34;

/** ħ: reduced Planck constant [J·s]. */
inline constexpr double hbar = h / (2.0 * pi);

/** k_B: Boltzmann constant [J/K]. */
inline constexpr double k_B = 1.380'649e-23;

/** μ_B: Bohr magneton [J/T]. */
inline constexpr double mu_B = 9.274'010'0783e-24;

/** μ₀: vacuum permeability [T·m/A]. */
inline constexpr double mu_0 = 1.256'637'062'12e-6;

/** Atomic mass of Rb-87 [kg]. */
inline constexpr double m_Rb87 = 1.44316e-25;

/** Ground-state hyperfine splitting A_hf = (E_{F=2} − E_{F=1})/h [Hz]. */
inline constexpr double A_hf = 6.835e9;

/** Electron Landé factor of the ²S₁/₂ ground state. */
inline constexpr double g_J = 2.002319;

/**
 * Hyperfine crossover field [T]. The nominal value is A_hf·h/(2μ_B) ≈ 0.2442 T;
 * the stored value uses g_J in place of 2 (≈ 0.2439 T, 0.12 % lower) so that
 * the low-field slope of the level formula equals μ_B·g_F exactly.
 */
inline constexpr double B_hf = A_hf * h / (g_J * mu_B);

/** A_hf·h/(2μ_B), the crossover field with g_J → 2 [T]. */
inline constexpr double B_hf_nominal = A_hf * h / (2.0 * mu_B);

inline constexpr double nuclear_spin_I = 1.5;
inline constexpr double electron_J = 0.5;

/** s-wave scattering length of Rb-87 [m], ≈ 100 a₀. */
inline constexpr double a_s_Rb87 = 5.29e-9;

} // namespace flexcool::constants

namespace flexcool {

/// Converts an ordinary frequency ν [Hz] to an angular frequency [rad/s].
constexpr double angular(double hz) noexcept { return 2.0 * constants::pi * hz; }

/// Converts an angular frequency [rad/s] to ν = ω/2π [Hz].
constexpr double over_2pi(double rad_s) noexcept { return rad_s / (2.0 * constants::pi); }

} // namespace flexcool
