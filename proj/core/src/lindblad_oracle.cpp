#include "flexcool/lindblad_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace flexcool::lindblad_oracle {

namespace {

constexpr double kTraceTolerance = 1e-9;
constexpr std::size_t kMaxLevels = std::size_t{1} << 22;

void check_population(const std::vector<double>& p) {
    if (p.empty()) throw std::domain_error("PopulationVector: empty");
    for (double v : p) {
        if (!std::isfinite(v) || v < kNegativeFloor) {
            throw std::domain_error("PopulationVector: populations must be finite and >= 0");
        }
    }
}

double sin_sq_phase(double g, double tau, std::size_t n) {
    const double s = std::sin(0.5 * g * tau * std::sqrt(static_cast<double>(n)));
    return s * s;
}

} // namespace

PopulationVector::PopulationVector(std::vector<double> populations) : p_(std::move(populations)) {
    check_population(p_);
    for (double& v : p_) v = std::max(v, 0.0);
}

PopulationVector PopulationVector::vacuum(std::size_t n_max) { return fock(0, n_max); }

PopulationVector PopulationVector::fock(std::size_t k, std::size_t n_max) {
    if (k > n_max) throw std::domain_error("PopulationVector::fock: k > n_max");
    std::vector<double> p(n_max + 1, 0.0);
    p[k] = 1.0;
    return PopulationVector(std::move(p));
}

PopulationVector PopulationVector::thermal(double n_th, std::size_t n_max) {
    if (!(n_th >= 0.0)) throw std::domain_error("PopulationVector::thermal: n_th must be >= 0");
    std::vector<double> p(n_max + 1, 0.0);
    const double q = n_th / (1.0 + n_th);
    double w = 1.0;
    for (double& v : p) {
        v = w;
        w *= q;
    }
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    for (double& v : p) v /= total;
    return PopulationVector(std::move(p));
}

double PopulationVector::trace() const { return std::accumulate(p_.begin(), p_.end(), 0.0); }

std::size_t OracleConfig::default_n_max(double n_th) {
    const double n = std::ceil(10.0 * n_th + 50.0);
    return std::max<std::size_t>(static_cast<std::size_t>(n), 200);
}

void OracleConfig::validate() const {
    auto nonneg = [](double v) { return v >= 0.0 && std::isfinite(v); };
    if (!nonneg(g) || !nonneg(tau) || !nonneg(gamma) || !nonneg(kappa) || !nonneg(n_th)) {
        throw std::domain_error("OracleConfig: g, tau, gamma, kappa, n_th must be finite and >= 0");
    }
    if (!(dt >= 0.0)) throw std::domain_error("OracleConfig: dt must be >= 0");
}

double pump_weight(PumpModel model, double g, double tau, std::size_t n) {
    if (model == PumpModel::exact_rabi) return sin_sq_phase(g, tau, n);
    return g * g * tau * tau * static_cast<double>(n) / 8.0;
}

double OracleConfig::max_exit_rate() const {
    const std::size_t top = n_max == 0 ? default_n_max(n_th) : n_max;
    double worst = 0.0;
    for (std::size_t n = 0; n <= top; ++n) {
        const double dn = static_cast<double>(n);
        double rate = gamma * pump_weight(pump, g, tau, n) + kappa * (n_th + 1.0) * dn;
        if (n < top) rate += kappa * n_th * (dn + 1.0);
        worst = std::max(worst, rate);
    }
    return worst;
}

bool OracleConfig::stable() const { return dt > 0.0 && dt * max_exit_rate() < 0.1; }

PopulationVector jc_kraus_map(const PopulationVector& p, double g, double tau) {
    if (!(g >= 0.0) || !(tau >= 0.0)) throw std::domain_error("jc_kraus_map: g, tau must be >= 0");
    const std::size_t top = p.n_max();
    std::vector<double> out(top + 1, 0.0);
    for (std::size_t n = 0; n <= top; ++n) {
        const double lost = sin_sq_phase(g, tau, n) * p[n];
        out[n] += p[n] - lost;
        if (n > 0) out[n - 1] += lost;
    }
    return PopulationVector(std::move(out));
}

void population_derivative(const OracleConfig& cfg, std::span<const double> p, std::span<double> dp) {
    const std::size_t top = p.size() - 1;
    const double down = cfg.kappa * (cfg.n_th + 1.0);
    const double up = cfg.kappa * cfg.n_th;
    std::fill(dp.begin(), dp.end(), 0.0);
    for (std::size_t n = 0; n <= top; ++n) {
        const double dn = static_cast<double>(n);
        // Every transition out of n is booked as a loss here and a gain at its target.
        if (n > 0) {
            const double flow = (cfg.gamma * pump_weight(cfg.pump, cfg.g, cfg.tau, n) + down * dn) * p[n];
            dp[n] -= flow;
            dp[n - 1] += flow;
        }
        if (n < top) {
            const double flow = up * (dn + 1.0) * p[n];
            dp[n] -= flow;
            dp[n + 1] += flow;
        }
    }
}

PopulationVector evolve_populations(PopulationVector p0, const OracleConfig& cfg, double t_final) {
    cfg.validate();
    if (!(t_final >= 0.0)) throw std::domain_error("evolve_populations: t_final must be >= 0");
    OracleConfig run = cfg;
    run.n_max = p0.n_max();
    if (!run.stable()) {
        throw OracleError("evolve_populations: unstable step, dt * max rate = " +
                          std::to_string(run.dt * run.max_exit_rate()) + " (needs < 0.1)");
    }

    std::vector<double> p(p0.values().begin(), p0.values().end());
    std::vector<double> dp(p.size());
    const double trace0 = std::accumulate(p.begin(), p.end(), 0.0);
    const auto steps = static_cast<std::size_t>(std::ceil(t_final / run.dt - 1e-12));
    for (std::size_t s = 0; s < steps; ++s) {
        const double h = std::min(run.dt, t_final - static_cast<double>(s) * run.dt);
        population_derivative(run, p, dp);
        for (std::size_t n = 0; n < p.size(); ++n) {
            p[n] += h * dp[n];
            if (p[n] < 0.0) {
                if (p[n] < kNegativeFloor) throw OracleError("evolve_populations: negative population");
                p[n] = 0.0;
            }
        }
        const double trace = std::accumulate(p.begin(), p.end(), 0.0);
        if (std::abs(trace - trace0) > kTraceTolerance) {
            throw OracleError("evolve_populations: trace drift " + std::to_string(trace - trace0));
        }
        if (p.back() > kTailMassLimit) {
            throw OracleError("evolve_populations: tail mass " + std::to_string(p.back()) +
                              " exceeds 1e-6 at n_max = " + std::to_string(p.size() - 1) +
                              "; increase n_max");
        }
    }
    return PopulationVector(std::move(p));
}

namespace {

// Zero net flow across every cut (n | n+1) of the birth–death chain:
//   κ n_th (n+1) p_n = [Γ w_{n+1} + κ (n_th+1)(n+1)] p_{n+1}.
// This is forward elimination of the tridiagonal stationary system.
std::vector<double> solve_stationary(const OracleConfig& cfg, std::size_t top) {
    std::vector<double> p(top + 1, 0.0);
    p[0] = 1.0;
    const double up = cfg.kappa * cfg.n_th;
    const double down = cfg.kappa * (cfg.n_th + 1.0);
    for (std::size_t n = 0; n < top; ++n) {
        const double dn1 = static_cast<double>(n + 1);
        const double out_rate = cfg.gamma * pump_weight(cfg.pump, cfg.g, cfg.tau, n + 1) + down * dn1;
        if (!(out_rate > 0.0)) {
            throw OracleError("steady_populations: singular generator (no decay out of level " +
                              std::to_string(n + 1) + ")");
        }
        p[n + 1] = p[n] * up * dn1 / out_rate;
    }
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    for (double& v : p) v /= total;
    return p;
}

} // namespace

PopulationVector steady_populations(const OracleConfig& cfg) {
    cfg.validate();
    if (!(cfg.gamma + cfg.kappa > 0.0)) {
        throw OracleError("steady_populations: singular system (gamma = kappa = 0)");
    }
    std::size_t top = cfg.n_max == 0 ? OracleConfig::default_n_max(cfg.n_th) : cfg.n_max;
    while (true) {
        auto p = solve_stationary(cfg, top);
        if (p.back() < kTailMassLimit) return PopulationVector(std::move(p));
        if (top >= kMaxLevels) {
            throw OracleError("steady_populations: tail mass above 1e-6 even at n_max = " +
                              std::to_string(top));
        }
        top *= 2;
    }
}

double mean_phonon(const PopulationVector& p) {
    double mean = 0.0;
    for (std::size_t n = 1; n < p.size(); ++n) mean += static_cast<double>(n) * p[n];
    return mean;
}

ApproximationResidual approximation_residual(const PopulationVector& p, double g, double tau) {
    ApproximationResidual r;
    for (std::size_t n = 1; n < p.size(); ++n) r.exact += p[n] * sin_sq_phase(g, tau, n);
    r.closed_form_approx = g * g * tau * tau * mean_phonon(p) / 8.0;
    if (r.closed_form_approx > 0.0) {
        r.ratio = r.exact / r.closed_form_approx;
    } else if (r.exact > 0.0) {
        r.ratio = std::numeric_limits<double>::infinity();
    } else {
        r.ratio = std::numeric_limits<double>::quiet_NaN();
    }
    return r;
}

} // namespace flexcool::lindblad_oracle
