#pragma once

// Run configuration: a flat `key = value` document (# comments) whose keys
// mirror HybridParams. Frequencies are entered as ν = ω/2π in Hz and converted
// to rad/s when the parameters are resolved. Missing keys take the cantilever
// baseline values.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "flexcool/bec_trap.hpp"
#include "flexcool/cooling_model.hpp"

namespace flexcool::cli {

/// Malformed or inconsistent configuration (exit code 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    double f_m_hz{1.0e6};
    double quality_Q{1.0e5};
    double m_eff_kg{1.0e-16};
    double temperature_K{0.050};
    std::optional<double> g0_rad_s;  // default 8 rad/s when no tip is given
    std::optional<double> tip_moment_A_m2;
    std::optional<double> tip_distance_m;
    std::uint64_t atom_number{5'000'000};
    double trap_fx_hz{250.0};
    double trap_fy_hz{250.0};
    double trap_fz_hz{19.0};
    bec_trap::ChemicalPotentialMode mu_c_mode{bec_trap::ChemicalPotentialMode::calibrated};
    double detuning_x{1.0 / 3.0};  // ħδ/μ_c
    std::uint64_t n_max{0};        // 0: automatic truncation
    double dt_s{0.0};              // 0: automatic stable step
    std::optional<double> bias_field_T;      // default: resonance field for ω_m − δ
    std::optional<double> amplitude_beta_m;  // default: thermal amplitude
};

inline constexpr double kDefaultG0 = 8.0;

[[nodiscard]] RunConfig parse_config(std::string_view text);
[[nodiscard]] RunConfig load_config(const std::filesystem::path& path);

/// Fully resolved key set, sorted, numbers rounded to 12 significant digits.
[[nodiscard]] nlohmann::json to_json(const RunConfig& config);

/// Inverse of to_json; same validation as parse_config.
[[nodiscard]] RunConfig config_from_json(const nlohmann::json& j);

/// `key = value` text that parses back to the same configuration.
[[nodiscard]] std::string to_config_text(const RunConfig& config);

/// Builds the physical parameter set. Throws ConfigError for inconsistent
/// coupling keys and std::domain_error for physically invalid values.
[[nodiscard]] cooling_model::HybridParams resolve(const RunConfig& config);

} // namespace flexcool::cli
