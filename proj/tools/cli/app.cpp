#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "flexcool/lindblad_oracle.hpp"

namespace flexcool::cli {

namespace {

std::optional<Format> parse_format(const std::string& name) {
    if (name.empty()) return std::nullopt;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    if (name == "text") return Format::text;
    throw UsageError("--format must be csv, json or text");
}

} // namespace

Invocation run_cli(int argc, const char* const* argv) {
    CLI::App app{"Steady-state cooling of a cantilever mode by out-coupled BEC atoms", "flexcool"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string out_path;
    std::string format_name;
    unsigned threads = 1;
    app.add_option("--config", config_path, "key = value configuration file");
    app.add_option("--out", out_path, "write output here instead of stdout");
    app.add_option("--format", format_name, "csv | json | text (default depends on command)");
    app.add_option("--threads", threads, "worker threads for sweeps")->check(CLI::Range(1u, 1024u));

    LevelsOptions levels;
    auto* levels_cmd = app.add_subcommand("levels", "hyperfine Zeeman levels and Larmor frequency vs B");
    levels_cmd->add_option("--b-min", levels.b_min, "lowest field [T]");
    levels_cmd->add_option("--b-max", levels.b_max, "highest field [T]");
    levels_cmd->add_option("--points", levels.points, "grid points");

    auto* steady_cmd = app.add_subcommand("steady", "closed-form steady state for one parameter set");

    DetuningSweep detuning;
    auto* detuning_cmd = app.add_subcommand("sweep-detuning", "n_steady vs x = hbar*delta/mu_c");
    detuning_cmd->add_option("--x-min", detuning.x_min);
    detuning_cmd->add_option("--x-max", detuning.x_max);
    detuning_cmd->add_option("--points", detuning.points);

    TemperatureSweep temperature;
    auto* temperature_cmd = app.add_subcommand("sweep-temperature", "n_steady vs initial temperature");
    temperature_cmd->add_option("--t-min", temperature.t_min, "[K]");
    temperature_cmd->add_option("--t-max", temperature.t_max, "[K]");
    temperature_cmd->add_option("--points", temperature.points);

    QfSweep qf;
    auto* qf_cmd = app.add_subcommand("sweep-qf", "n_steady over log-spaced quality factor and frequency");
    qf_cmd->add_option("--q-min", qf.q_min);
    qf_cmd->add_option("--q-max", qf.q_max);
    qf_cmd->add_option("--f-min", qf.f_min_hz, "[Hz]");
    qf_cmd->add_option("--f-max", qf.f_max_hz, "[Hz]");
    qf_cmd->add_option("--points", qf.points, "points per axis");
    qf_cmd->add_option("--temperature", qf.temperature_K, "oscillator temperature for the sweep [K]");

    MasterEqOptions master;
    std::string pump_name = "exact";
    auto* master_cmd = app.add_subcommand("master-eq", "truncated-Fock master-equation oracle");
    master_cmd->add_option("--pump", pump_name, "exact | closed-form")
        ->check(CLI::IsMember({"exact", "closed-form"}));
    master_cmd->add_option("--t-final", master.t_final, "also evolve the thermal state for this long [s]");

    auto* validate_cmd = app.add_subcommand("validate", "regime checks; exit 5 if any fails");

    Invocation inv;
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out;
        std::ostringstream err;
        inv.exit_code = app.exit(e, out, err);
        if (inv.exit_code != 0) inv.exit_code = kExitUsage;
        inv.out = out.str();
        inv.err = err.str();
        return inv;
    }

    CommandResult result;
    try {
        const RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
        const auto fmt = parse_format(format_name);
        master.pump = pump_name == "exact" ? PumpChoice::exact : PumpChoice::closed_form;

        if (levels_cmd->parsed()) result = cmd_levels(cfg, levels, fmt.value_or(Format::csv));
        else if (steady_cmd->parsed()) result = cmd_steady(cfg, fmt.value_or(Format::json));
        else if (detuning_cmd->parsed()) result = cmd_sweep_detuning(cfg, detuning, fmt.value_or(Format::csv), threads);
        else if (temperature_cmd->parsed())
            result = cmd_sweep_temperature(cfg, temperature, fmt.value_or(Format::csv), threads);
        else if (qf_cmd->parsed()) result = cmd_sweep_qf(cfg, qf, fmt.value_or(Format::csv), threads);
        else if (master_cmd->parsed()) result = cmd_master_eq(cfg, master, fmt.value_or(Format::json));
        else if (validate_cmd->parsed()) result = cmd_validate(cfg, fmt.value_or(Format::text));
    } catch (const ConfigError& e) {
        inv.err = std::string("error: ") + e.what() + "\n";
        inv.exit_code = kExitUsage;
        return inv;
    } catch (const UsageError& e) {
        inv.err = std::string("error: ") + e.what() + "\n";
        inv.exit_code = kExitUsage;
        return inv;
    } catch (const lindblad_oracle::OracleError& e) {
        inv.err = std::string("oracle error: ") + e.what() + "\n";
        inv.exit_code = kExitOracle;
        return inv;
    } catch (const std::domain_error& e) {
        inv.err = std::string("domain error: ") + e.what() + "\n";
        inv.exit_code = kExitDomain;
        return inv;
    }

    inv.exit_code = result.exit_code;
    if (out_path.empty()) {
        inv.out = std::move(result.output);
    } else {
        std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            inv.err = "error: cannot write '" + out_path + "'\n";
            inv.exit_code = kExitUsage;
            return inv;
        }
        file << result.output;
    }
    return inv;
}

} // namespace flexcool::cli
