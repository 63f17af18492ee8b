#pragma once

// Exact phonon-population dynamics of the coarse-grained master equation
//
//   dρ/dt = Γ [M(τ) − 1] ρ + ℒ[ρ],
//
// where M(τ) traces out one atom that entered in |0⟩ and interacted for τ under
// the resonant JC coupling H_I = (ħg/2)(aσ₊ + a†σ₋), and ℒ is the thermal
// amplitude-damping dissipator (rate κ, occupancy n_th).
//
// Both generators map diagonal density operators onto diagonal ones, so the
// state is carried as Fock-space populations p_n, n = 0..n_max. The generator
// couples only n and n ± 1.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace flexcool::lindblad_oracle {

/// Numerical failures (truncation too small, unstable step).
class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kTailMassLimit = 1e-6;
inline constexpr double kNegativeFloor = -1e-12;

class PopulationVector {
public:
    PopulationVector() = default;
    explicit PopulationVector(std::vector<double> populations);

    static PopulationVector vacuum(std::size_t n_max);
    static PopulationVector fock(std::size_t k, std::size_t n_max);
    /// Truncated Bose–Einstein distribution with mean ≈ n_th, renormalized.
    static PopulationVector thermal(double n_th, std::size_t n_max);

    [[nodiscard]] std::size_t n_max() const { return p_.size() - 1; }
    [[nodiscard]] std::size_t size() const { return p_.size(); }
    [[nodiscard]] double operator[](std::size_t n) const { return p_[n]; }
    [[nodiscard]] std::span<const double> values() const { return p_; }

    [[nodiscard]] double trace() const;
    [[nodiscard]] double tail_mass() const { return p_.back(); }

private:
    std::vector<double> p_;
};

/// How one atom's pass removes phonons from level n.
enum class PumpModel {
    exact_rabi,  // sin²(g τ √n / 2)
    /// The linearized weight g²τ²n/8 behind the closed-form steady state; not a
    /// probability, only a rate weight.
    closed_form_eighth,
};

struct OracleConfig {
    double g{0.0};      // [rad/s], g₀ or g_N
    double tau{0.0};    // [s]
    double gamma{0.0};  // atom arrival rate Γ [1/s]
    double kappa{0.0};  // [1/s]
    double n_th{0.0};
    std::size_t n_max{0};
    double dt{0.0};     // explicit step [s]
    PumpModel pump{PumpModel::exact_rabi};

    /// max(10 n_th + 50, 200).
    [[nodiscard]] static std::size_t default_n_max(double n_th);

    /// Throws std::domain_error on negative rates or n_max = 0.
    void validate() const;

    /// Largest total out-rate of any level [1/s].
    [[nodiscard]] double max_exit_rate() const;

    /// dt · max_exit_rate < 0.1.
    [[nodiscard]] bool stable() const;
};

/// Weight of the |n,0⟩ → |n−1,1⟩ transfer for one atom pass.
[[nodiscard]] double pump_weight(PumpModel model, double g, double tau, std::size_t n);

/// p'_n = cos²(φ_n) p_n + sin²(φ_{n+1}) p_{n+1}, φ_n = g τ √n / 2.
[[nodiscard]] PopulationVector jc_kraus_map(const PopulationVector& p, double g, double tau);

/// dp/dt for the full generator (exposed for fixed-point checks).
void population_derivative(const OracleConfig& cfg, std::span<const double> p, std::span<double> dp);

/// Forward-Euler integration with step cfg.dt. Throws OracleError if the step
/// is unstable, the trace drifts by more than 1e-9 or the tail mass exceeds 1e-6.
[[nodiscard]] PopulationVector evolve_populations(PopulationVector p0, const OracleConfig& cfg, double t_final);

/// Stationary populations by direct elimination of the tridiagonal generator.
/// cfg.n_max = 0 means "auto"; the truncation is doubled until the tail mass
/// is below 1e-6 (throws OracleError past 2^22 levels).
[[nodiscard]] PopulationVector steady_populations(const OracleConfig& cfg);

[[nodiscard]] double mean_phonon(const PopulationVector& p);

struct ApproximationResidual {
    double exact{0.0};         // Tr{a†a[1 − M(τ)]ρ} = Σ p_n sin²(φ_n)
    double closed_form_approx{0.0};  // g²τ²⟨n⟩/8
    double ratio{0.0};         // exact / closed_form_approx (∞ if only the latter vanishes)
};

[[nodiscard]] ApproximationResidual approximation_residual(const PopulationVector& p, double g, double tau);

} // namespace flexcool::lindblad_oracle
