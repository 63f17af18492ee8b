#include "flexcool/density_matrix_oracle.hpp"

#include <cmath>

namespace flexcool::lindblad_oracle {

namespace {

using cd = std::complex<double>;

// Joint basis index for |n⟩ ⊗ |s⟩, s = 0 (trapped) or 1 (flipped).
std::size_t joint(std::size_t n, std::size_t s) { return 2 * n + s; }

} // namespace

DensityMatrixOracle::DensityMatrixOracle(const OracleConfig& cfg) : cfg_(cfg), dim_(cfg.n_max + 1) {
    cfg.validate();
    if (cfg.n_max < 1) throw std::domain_error("DensityMatrixOracle: n_max must be >= 1");

    lower_ = Eigen::MatrixXd::Zero(dim_, dim_);
    for (std::size_t n = 1; n < dim_; ++n) lower_(n - 1, n) = std::sqrt(static_cast<double>(n));

    // H/ħ = (g/2)(a σ₊ + a† σ₋), σ₊ = |1⟩⟨0|.
    const std::size_t jd = 2 * dim_;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(jd, jd);
    for (std::size_t n = 1; n < dim_; ++n) {
        const double amp = 0.5 * cfg.g * std::sqrt(static_cast<double>(n));
        h(joint(n - 1, 1), joint(n, 0)) = amp;
        h(joint(n, 0), joint(n - 1, 1)) = amp;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
    const Eigen::MatrixXcd v = eig.eigenvectors().cast<cd>();
    Eigen::VectorXcd phases(jd);
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(jd); ++k) {
        phases(k) = std::exp(cd(0.0, -eig.eigenvalues()(k) * cfg.tau));
    }
    const Eigen::MatrixXcd u = v * phases.asDiagonal() * v.adjoint();

    kraus_stay_ = Matrix::Zero(dim_, dim_);
    kraus_flip_ = Matrix::Zero(dim_, dim_);
    for (std::size_t m = 0; m < dim_; ++m) {
        for (std::size_t n = 0; n < dim_; ++n) {
            kraus_stay_(m, n) = u(joint(m, 0), joint(n, 0));
            kraus_flip_(m, n) = u(joint(m, 1), joint(n, 0));
        }
    }
}

DensityMatrixOracle::Matrix DensityMatrixOracle::apply_kraus(const Matrix& rho) const {
    return kraus_stay_ * rho * kraus_stay_.adjoint() + kraus_flip_ * rho * kraus_flip_.adjoint();
}

DensityMatrixOracle::Matrix DensityMatrixOracle::dissipator(const Matrix& rho) const {
    const Matrix a = lower_.cast<cd>();
    const Matrix ad = a.adjoint();
    const Matrix n_op = ad * a;
    const Matrix anti_n = a * ad;
    const double down = 0.5 * cfg_.kappa * (cfg_.n_th + 1.0);
    const double up = 0.5 * cfg_.kappa * cfg_.n_th;
    return down * (2.0 * a * rho * ad - n_op * rho - rho * n_op) +
           up * (2.0 * ad * rho * a - anti_n * rho - rho * anti_n);
}

DensityMatrixOracle::Matrix DensityMatrixOracle::generator(const Matrix& rho) const {
    return cfg_.gamma * (apply_kraus(rho) - rho) + dissipator(rho);
}

DensityMatrixOracle::Matrix DensityMatrixOracle::steady_state() const {
    const auto d = static_cast<Eigen::Index>(dim_);
    const Eigen::Index dd = d * d;
    Eigen::MatrixXcd liouvillian(dd, dd);
    Matrix basis = Matrix::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index i = 0; i < d; ++i) {
            basis(i, j) = 1.0;
            const Matrix col = generator(basis);
            liouvillian.col(i + j * d) = Eigen::Map<const Eigen::VectorXcd>(col.data(), dd);
            basis(i, j) = 0.0;
        }
    }
    // Replace the first equation by Tr ρ = 1.
    liouvillian.row(0).setZero();
    for (Eigen::Index k = 0; k < d; ++k) liouvillian(0, k + k * d) = 1.0;
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(dd);
    rhs(0) = 1.0;
    const Eigen::VectorXcd x = liouvillian.partialPivLu().solve(rhs);
    Matrix rho = Eigen::Map<const Matrix>(x.data(), d, d);
    return 0.5 * (rho + rho.adjoint());
}

DensityMatrixOracle::Matrix DensityMatrixOracle::from_populations(const PopulationVector& p) {
    Matrix rho = Matrix::Zero(static_cast<Eigen::Index>(p.size()), static_cast<Eigen::Index>(p.size()));
    for (std::size_t n = 0; n < p.size(); ++n) rho(n, n) = p[n];
    return rho;
}

PopulationVector DensityMatrixOracle::diagonal(const Matrix& rho) {
    std::vector<double> p(static_cast<std::size_t>(rho.rows()));
    for (std::size_t n = 0; n < p.size(); ++n) {
        const double v = rho(n, n).real();
        p[n] = (v < 0.0 && v > kNegativeFloor) ? 0.0 : v;
    }
    return PopulationVector(std::move(p));
}

double DensityMatrixOracle::max_off_diagonal(const Matrix& rho) {
    double worst = 0.0;
    for (Eigen::Index j = 0; j < rho.cols(); ++j) {
        for (Eigen::Index i = 0; i < rho.rows(); ++i) {
            if (i != j) worst = std::max(worst, std::abs(rho(i, j)));
        }
    }
    return worst;
}

} // namespace flexcool::lindblad_oracle
