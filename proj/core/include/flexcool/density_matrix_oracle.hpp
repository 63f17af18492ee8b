#pragma once

// Full density-matrix version of the cooling master equation on a small
// truncated Fock space. It builds M(τ) from the matrix exponential of the
// joint oscillator ⊗ two-level Hamiltonian rather than from the closed-form
// populations, and exists to validate the population solver (diagonal
// closure, steady state). Cost grows as n_max⁶; keep n_max ≲ 40.

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "flexcool/lindblad_oracle.hpp"

namespace flexcool::lindblad_oracle {

class DensityMatrixOracle {
public:
    using Matrix = Eigen::MatrixXcd;

    /// Uses cfg.n_max (must be ≥ 1) and ignores cfg.pump (always exact).
    explicit DensityMatrixOracle(const OracleConfig& cfg);

    [[nodiscard]] std::size_t dimension() const { return dim_; }

    /// Tr_atom[U (ρ ⊗ |0⟩⟨0|) U†].
    [[nodiscard]] Matrix apply_kraus(const Matrix& rho) const;

    /// ℒ[ρ] with the truncated annihilation operator.
    [[nodiscard]] Matrix dissipator(const Matrix& rho) const;

    /// Γ(M − 1)ρ + ℒ[ρ].
    [[nodiscard]] Matrix generator(const Matrix& rho) const;

    /// Null vector of the Liouvillian with unit trace.
    [[nodiscard]] Matrix steady_state() const;

    [[nodiscard]] static Matrix from_populations(const PopulationVector& p);
    [[nodiscard]] static PopulationVector diagonal(const Matrix& rho);
    /// Largest |ρ_mn| with m ≠ n.
    [[nodiscard]] static double max_off_diagonal(const Matrix& rho);

private:
    OracleConfig cfg_;
    std::size_t dim_;
    Matrix kraus_stay_;  // ⟨0|U|0⟩
    Matrix kraus_flip_;  // ⟨1|U|0⟩
    Eigen::MatrixXd lower_;  // truncated a
};

} // namespace flexcool::lindblad_oracle
