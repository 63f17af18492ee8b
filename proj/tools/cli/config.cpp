#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "flexcool/constants.hpp"
#include "format.hpp"

namespace flexcool::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, value);
    if (res.ec != std::errc{} || res.ptr != end || !std::isfinite(value)) {
        throw ConfigError("config: key '" + std::string(key) + "' expects a number, got '" +
                          std::string(text) + "'");
    }
    return value;
}

std::uint64_t parse_count(std::string_view key, std::string_view text) {
    const double v = parse_double(key, text);
    if (v < 0.0 || v != std::floor(v) || v > 9.0e15) {
        throw ConfigError("config: key '" + std::string(key) + "' expects a non-negative integer");
    }
    return static_cast<std::uint64_t>(v);
}

void set_key(RunConfig& cfg, std::string_view key, std::string_view value) {
    if (key == "f_m_hz") cfg.f_m_hz = parse_double(key, value);
    else if (key == "quality_Q") cfg.quality_Q = parse_double(key, value);
    else if (key == "m_eff_kg") cfg.m_eff_kg = parse_double(key, value);
    else if (key == "temperature_K") cfg.temperature_K = parse_double(key, value);
    else if (key == "g0_rad_s") cfg.g0_rad_s = parse_double(key, value);
    else if (key == "tip_moment_A_m2") cfg.tip_moment_A_m2 = parse_double(key, value);
    else if (key == "tip_distance_m") cfg.tip_distance_m = parse_double(key, value);
    else if (key == "atom_number") cfg.atom_number = parse_count(key, value);
    else if (key == "trap_fx_hz") cfg.trap_fx_hz = parse_double(key, value);
    else if (key == "trap_fy_hz") cfg.trap_fy_hz = parse_double(key, value);
    else if (key == "trap_fz_hz") cfg.trap_fz_hz = parse_double(key, value);
    else if (key == "detuning_x") cfg.detuning_x = parse_double(key, value);
    else if (key == "n_max") cfg.n_max = parse_count(key, value);
    else if (key == "dt_s") cfg.dt_s = parse_double(key, value);
    else if (key == "bias_field_T") cfg.bias_field_T = parse_double(key, value);
    else if (key == "amplitude_beta_m") cfg.amplitude_beta_m = parse_double(key, value);
    else if (key == "mu_c_mode") {
        try {
            cfg.mu_c_mode = bec_trap::parse_mode(value);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
    } else {
        throw ConfigError("config: unknown key '" + std::string(key) + "'");
    }
}

void check_coupling_keys(const RunConfig& cfg) {
    const bool tip = cfg.tip_moment_A_m2 || cfg.tip_distance_m;
    if (tip && !(cfg.tip_moment_A_m2 && cfg.tip_distance_m)) {
        throw ConfigError("config: tip_moment_A_m2 and tip_distance_m must be given together");
    }
    if (tip && cfg.g0_rad_s) {
        throw ConfigError("config: give either g0_rad_s or the tip keys, not both");
    }
}

} // namespace

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError("config line " + std::to_string(line_no) + ": empty key or value");
        }
        if (!seen.emplace(key).second) {
            throw ConfigError("config: duplicate key '" + std::string(key) + "'");
        }
        set_key(cfg, key, value);
    }
    check_coupling_keys(cfg);
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("config: cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

nlohmann::json to_json(const RunConfig& cfg) {
    nlohmann::json j;
    j["f_m_hz"] = json_number(cfg.f_m_hz);
    j["quality_Q"] = json_number(cfg.quality_Q);
    j["m_eff_kg"] = json_number(cfg.m_eff_kg);
    j["temperature_K"] = json_number(cfg.temperature_K);
    if (cfg.tip_moment_A_m2 && cfg.tip_distance_m) {
        j["tip_moment_A_m2"] = json_number(*cfg.tip_moment_A_m2);
        j["tip_distance_m"] = json_number(*cfg.tip_distance_m);
    } else {
        j["g0_rad_s"] = json_number(cfg.g0_rad_s.value_or(kDefaultG0));
    }
    j["atom_number"] = cfg.atom_number;
    j["trap_fx_hz"] = json_number(cfg.trap_fx_hz);
    j["trap_fy_hz"] = json_number(cfg.trap_fy_hz);
    j["trap_fz_hz"] = json_number(cfg.trap_fz_hz);
    j["mu_c_mode"] = std::string(bec_trap::to_string(cfg.mu_c_mode));
    j["detuning_x"] = json_number(cfg.detuning_x);
    j["n_max"] = cfg.n_max;
    j["dt_s"] = json_number(cfg.dt_s);
    if (cfg.bias_field_T) j["bias_field_T"] = json_number(*cfg.bias_field_T);
    if (cfg.amplitude_beta_m) j["amplitude_beta_m"] = json_number(*cfg.amplitude_beta_m);
    return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config: JSON config must be an object");
    RunConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (value.is_string()) {
            set_key(cfg, key, value.get<std::string>());
        } else if (value.is_number()) {
            set_key(cfg, key, value.dump());
        } else {
            throw ConfigError("config: key '" + key + "' must be a number or string");
        }
    }
    check_coupling_keys(cfg);
    return cfg;
}

std::string to_config_text(const RunConfig& cfg) {
    std::string out;
    const auto j = to_json(cfg);
    for (const auto& [key, value] : j.items()) {
        out += key + " = " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
    return out;
}

cooling_model::HybridParams resolve(const RunConfig& cfg) {
    check_coupling_keys(cfg);
    cooling_model::HybridParams p;
    p.osc.omega_m = angular(cfg.f_m_hz);
    p.osc.quality_Q = cfg.quality_Q;
    p.osc.m_eff = cfg.m_eff_kg;
    p.osc.temperature_T = cfg.temperature_K;
    p.osc.amplitude_beta = cfg.amplitude_beta_m;
    if (cfg.tip_moment_A_m2) {
        p.coupling = coupling::MagneticTip{*cfg.tip_moment_A_m2, *cfg.tip_distance_m};
    } else {
        p.coupling = cooling_model::CouplingRate{cfg.g0_rad_s.value_or(kDefaultG0)};
    }
    p.trap = {angular(cfg.trap_fx_hz), angular(cfg.trap_fy_hz), angular(cfg.trap_fz_hz), cfg.atom_number};
    p.mu_c = bec_trap::chemical_potential(p.trap, cfg.mu_c_mode);
    p.detuning_delta = cfg.detuning_x * p.mu_c / constants::hbar;
    p.bias_field = cfg.bias_field_T;
    p.validate();
    return p;
}

} // namespace flexcool::cli
