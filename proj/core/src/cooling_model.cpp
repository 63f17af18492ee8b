#include "flexcool/cooling_model.hpp"

#include <cmath>
#include <stdexcept>
#include <type_traits>

#include "flexcool/constants.hpp"
#include "flexcool/hyperfine.hpp"

namespace flexcool::cooling_model {

namespace c = flexcool::constants;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void validate_coupling(const CouplingSource& source) {
    std::visit(overloaded{
                   [](const MagneticTip& tip) { tip.validate(); },
                   [](const FieldGradient& g) {
                       if (!(g.tesla_per_m > 0.0) || !std::isfinite(g.tesla_per_m)) {
                           throw std::domain_error("HybridParams: field gradient must be > 0");
                       }
                   },
                   [](const CouplingRate& r) {
                       if (!(r.g0 > 0.0) || !std::isfinite(r.g0)) {
                           throw std::domain_error("HybridParams: g0 must be > 0");
                       }
                   },
               },
               source);
}

} // namespace

void HybridParams::validate() const {
    osc.validate();
    trap.validate();
    validate_coupling(coupling);
    if (!(mu_c > 0.0) || !std::isfinite(mu_c)) {
        throw std::domain_error("HybridParams: chemical potential must be > 0");
    }
    if (!std::isfinite(detuning_delta)) throw std::domain_error("HybridParams: detuning must be finite");
    if (!(osc.omega_m - detuning_delta > 0.0)) {
        throw std::domain_error("HybridParams: resonance needs omega_L = omega_m - delta > 0");
    }
    if (bias_field && !(*bias_field >= 0.0)) {
        throw std::domain_error("HybridParams: bias field must be >= 0");
    }
}

HybridParams reference_baseline() {
    HybridParams p;
    p.osc.omega_m = angular(1.0e6);
    p.osc.quality_Q = 1.0e5;
    p.osc.m_eff = 1.0e-16;
    p.osc.temperature_T = 0.050;
    p.coupling = CouplingRate{8.0};
    p.trap = bec_trap::reference_trap();
    p.mu_c = bec_trap::chemical_potential(p.trap, bec_trap::ChemicalPotentialMode::calibrated);
    p.detuning_delta = optimal_detuning(p.mu_c);
    return p;
}

double thermal_phonon_number(double omega, double temperature) {
    if (!(omega > 0.0)) throw std::domain_error("thermal_phonon_number: omega must be > 0");
    if (!(temperature >= 0.0)) throw std::domain_error("thermal_phonon_number: T must be >= 0");
    if (temperature == 0.0) return 0.0;
    return 1.0 / std::expm1(c::hbar * omega / (c::k_B * temperature));
}

double decay_rate(double omega, double quality_Q) {
    if (!(quality_Q > 0.0)) throw std::domain_error("decay_rate: Q must be > 0");
    return omega / quality_Q;
}

double steady_phonon_basic(double n_th, double g, double tau, double gamma, double kappa) {
    if (!(kappa > 0.0)) throw std::domain_error("steady_phonon_basic: kappa must be > 0");
    if (!(n_th >= 0.0) || !(g >= 0.0) || !(tau >= 0.0) || !(gamma >= 0.0)) {
        throw std::domain_error("steady_phonon_basic: inputs must be >= 0");
    }
    return n_th / (1.0 + g * g * tau * tau * gamma / (8.0 * kappa));
}

double field_gradient(const HybridParams& params) {
    return std::visit(overloaded{
                          [](const MagneticTip& tip) { return coupling::dipole_gradient(tip); },
                          [](const FieldGradient& g) { return g.tesla_per_m; },
                          [&](const CouplingRate& r) {
                              return coupling::gradient_for_coupling(
                                  r.g0, coupling::zero_point_amplitude(params.osc));
                          },
                      },
                      params.coupling);
}

double single_atom_coupling(const HybridParams& params) {
    if (const auto* rate = std::get_if<CouplingRate>(&params.coupling)) return rate->g0;
    return coupling::single_atom_coupling(field_gradient(params),
                                          coupling::zero_point_amplitude(params.osc));
}

coupling::CouplingChain coupling_chain(const HybridParams& params) {
    coupling::CouplingChain chain;
    chain.gradient_Gm = field_gradient(params);
    chain.a_qm = coupling::zero_point_amplitude(params.osc);
    chain.g0 = single_atom_coupling(params);
    chain.gN = coupling::collective_coupling(chain.g0, params.trap.atom_number);
    chain.rabi_Omega = coupling::rabi_frequency(chain.gradient_Gm, coupling::thermal_amplitude(params.osc));
    chain.tau = coupling::interaction_time(chain.rabi_Omega);
    return chain;
}

double bias_field(const HybridParams& params) {
    if (params.bias_field) return *params.bias_field;
    return hyperfine::field_for_larmor(params.osc.omega_m - params.detuning_delta);
}

double cooling_factor(const HybridParams& params) {
    const double pre = c::pi * c::mu_B / (8.0 * c::hbar);
    const double g_a = field_gradient(params) * coupling::zero_point_amplitude(params.osc);
    const double n = static_cast<double>(params.trap.atom_number);
    return pre * pre * n * bec_trap::zeta(params.detuning_delta, params.mu_c) * g_a * g_a *
           params.osc.quality_Q / params.osc.omega_m;
}

coupling::ValidityReport validity_report(const HybridParams& params) {
    const auto chain = coupling_chain(params);
    const double beta = params.osc.amplitude_beta.value_or(coupling::thermal_amplitude(params.osc));
    std::optional<double> d0;
    if (const auto* tip = std::get_if<MagneticTip>(&params.coupling)) d0 = tip->distance_d0;
    return coupling::validity_report(chain.g0, chain.tau, beta, d0, bias_field(params));
}

SteadyStateResult steady_phonon_full(const HybridParams& params) {
    params.validate();
    const double x = bec_trap::detuning_ratio(params.detuning_delta, params.mu_c);
    if (!(x > 0.0 && x < 1.0)) {
        throw std::domain_error("steady_phonon_full: ħδ/μ_c must lie strictly inside (0, 1)");
    }

    SteadyStateResult r;
    r.detuning_x = x;
    r.n_th = thermal_phonon_number(params.osc.omega_m, params.osc.temperature_T);
    r.kappa = decay_rate(params.osc.omega_m, params.osc.quality_Q);
    r.zeta = bec_trap::zeta_strict(params.detuning_delta, params.mu_c);

    const auto chain = coupling_chain(params);
    r.a_qm = chain.a_qm;
    r.gradient = chain.gradient_Gm;
    r.g0 = chain.g0;
    r.gN = chain.gN;
    r.rabi = chain.rabi_Omega;
    r.tau = chain.tau;
    r.thermal_amplitude = coupling::thermal_amplitude(params.osc);
    r.gamma = bec_trap::transition_rate(params.detuning_delta, params.mu_c, r.rabi);

    r.cooling_factor = cooling_factor(params);
    r.n_steady = r.n_th / (1.0 + r.cooling_factor);
    r.n_steady_chain = steady_phonon_basic(r.n_th, r.gN, r.tau, r.gamma, r.kappa);

    r.bias_field = bias_field(params);
    r.validity = validity_report(params);
    return r;
}

double optimal_detuning(double mu_c) {
    if (!(mu_c > 0.0)) throw std::domain_error("optimal_detuning: mu_c must be > 0");
    return mu_c / (3.0 * c::hbar);
}

double ground_state_threshold_temperature(const HybridParams& params) {
    const double factor = cooling_factor(params);
    if (!(factor > 0.0)) {
        throw std::domain_error("ground_state_threshold_temperature: no cooling (cooling factor = 0)");
    }
    const double omega = params.osc.omega_m;
    auto n_steady = [&](double T) { return thermal_phonon_number(omega, T) / (1.0 + factor); };

    double lo = 0.0;
    double hi = 1e-3;
    while (n_steady(hi) <= 1.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e12) throw std::domain_error("ground_state_threshold_temperature: no bracket");
    }
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        (n_steady(mid) < 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

QfCriterion qf_quantum_criterion(double omega, double quality_Q, double temperature) {
    QfCriterion q;
    q.product = quality_Q * over_2pi(omega);
    q.bound = c::k_B * temperature / c::h;
    q.pass = q.product > q.bound;
    return q;
}

HybridParams rescale_oscillator(const HybridParams& params, double omega_new, double q_new) {
    if (!(omega_new > 0.0) || !(q_new > 0.0)) {
        throw std::domain_error("rescale_oscillator: omega and Q must be > 0");
    }
    HybridParams out = params;
    if (std::holds_alternative<CouplingRate>(params.coupling)) {
        out.coupling = FieldGradient{field_gradient(params)};
    }
    out.osc.omega_m = omega_new;
    out.osc.quality_Q = q_new;
    return out;
}

} // namespace flexcool::cooling_model
