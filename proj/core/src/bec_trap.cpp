#include "flexcool/bec_trap.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "flexcool/constants.hpp"

namespace flexcool::bec_trap {

namespace c = flexcool::constants;

namespace {

constexpr double kReferenceAtoms = 5e6;
constexpr double kReferenceFx = 250.0;
constexpr double kReferenceFy = 250.0;
constexpr double kReferenceFz = 19.0;
constexpr double kReferenceMuHz = 2880.0;

void require_mu(double mu_c) {
    if (!(mu_c > 0.0) || !std::isfinite(mu_c)) {
        throw std::domain_error("bec_trap: chemical potential must be > 0");
    }
}

} // namespace

void TrapParams::validate() const {
    for (double w : {omega_x, omega_y, omega_z}) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw std::domain_error("TrapParams: trap frequencies must be > 0");
        }
    }
    if (atom_number == 0) throw std::domain_error("TrapParams: atom number must be >= 1");
}

std::string_view to_string(ChemicalPotentialMode mode) {
    switch (mode) {
    case ChemicalPotentialMode::calibrated: return "calibrated";
    case ChemicalPotentialMode::thomas_fermi: return "thomas_fermi";
    }
    return "calibrated";
}

ChemicalPotentialMode parse_mode(std::string_view name) {
    if (name == "calibrated") return ChemicalPotentialMode::calibrated;
    if (name == "thomas_fermi") return ChemicalPotentialMode::thomas_fermi;
    throw std::invalid_argument("unknown chemical-potential mode '" + std::string(name) + "'");
}

TrapParams reference_trap() {
    return {angular(kReferenceFx), angular(kReferenceFy), angular(kReferenceFz),
            static_cast<std::uint64_t>(kReferenceAtoms)};
}

double reference_mu_over_hbar() { return angular(kReferenceMuHz); }

double chemical_potential(const TrapParams& trap, ChemicalPotentialMode mode) {
    trap.validate();
    const double n = static_cast<double>(trap.atom_number);
    if (mode == ChemicalPotentialMode::calibrated) {
        const TrapParams ref = reference_trap();
        const double scale = (n * trap.omega_x * trap.omega_y * trap.omega_z) /
                             (kReferenceAtoms * ref.omega_x * ref.omega_y * ref.omega_z);
        return c::hbar * reference_mu_over_hbar() * std::pow(scale, 0.4);
    }
    const double omega_bar = std::cbrt(trap.omega_x * trap.omega_y * trap.omega_z);
    const double a_ho = std::sqrt(c::hbar / (c::m_Rb87 * omega_bar));
    return 0.5 * c::hbar * omega_bar * std::pow(15.0 * n * c::a_s_Rb87 / a_ho, 0.4);
}

Radii tf_radii(const TrapParams& trap, double mu_c) {
    require_mu(mu_c);
    auto radius = [mu_c](double w) {
        if (!(w > 0.0)) throw std::domain_error("tf_radii: trap frequencies must be > 0");
        return std::sqrt(2.0 * mu_c / (c::m_Rb87 * w * w));
    };
    return {radius(trap.omega_x), radius(trap.omega_y), radius(trap.omega_z)};
}

CondensateModel make_condensate(const TrapParams& trap, ChemicalPotentialMode mode) {
    CondensateModel model;
    model.mode = mode;
    model.mu_c = chemical_potential(trap, mode);
    model.tf_radii = tf_radii(trap, model.mu_c);
    return model;
}

double detuning_ratio(double delta, double mu_c) {
    require_mu(mu_c);
    return c::hbar * delta / mu_c;
}

bool in_resonance_shell(double delta, double mu_c) {
    const double x = detuning_ratio(delta, mu_c);
    return x >= 0.0 && x <= 1.0;
}

Radii resonance_shell(double delta, double mu_c, const Radii& radii) {
    const double x = detuning_ratio(delta, mu_c);
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error("resonance_shell: ħδ/μ_c must lie in [0, 1]");
    }
    const double s = std::sqrt(x);
    return {radii[0] * s, radii[1] * s, radii[2] * s};
}

double zeta_prefactor(double mu_c) {
    require_mu(mu_c);
    return 15.0 * c::pi * c::hbar / (8.0 * mu_c);
}

double zeta(double delta, double mu_c) {
    const double x = detuning_ratio(delta, mu_c);
    if (!(x >= 0.0 && x <= 1.0)) return 0.0;
    const double s = std::sqrt(x);
    return zeta_prefactor(mu_c) * (s - s * s * s);
}

double zeta_strict(double delta, double mu_c) {
    if (!in_resonance_shell(delta, mu_c)) {
        throw std::domain_error("zeta: ħδ/μ_c outside [0, 1], no resonance shell");
    }
    return zeta(delta, mu_c);
}

double transition_rate(double delta, double mu_c, double rabi) {
    if (!(rabi >= 0.0)) throw std::domain_error("transition_rate: Rabi frequency must be >= 0");
    return zeta(delta, mu_c) * rabi * rabi;
}

} // namespace flexcool::bec_trap
