#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "config.hpp"

namespace flexcool::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitDomain = 3,
    kExitOracle = 4,
    kExitValidity = 5,
};

enum class Format { csv, json, text };

struct CommandResult {
    std::string output;
    int exit_code{kExitOk};
};

struct LevelsOptions {
    double b_min{0.0};
    double b_max{0.3};
    std::size_t points{31};
};

struct DetuningSweep {
    double x_min{0.01};
    double x_max{0.99};
    std::size_t points{99};
};

struct TemperatureSweep {
    double t_min{0.0};
    double t_max{4.2};
    std::size_t points{421};
};

struct QfSweep {
    double q_min{1e3};
    double q_max{1e7};
    double f_min_hz{1e3};
    double f_max_hz{1e7};
    std::size_t points{41};  // per axis
    double temperature_K{4.2};  // replaces the config temperature for this sweep
};

enum class PumpChoice { exact, closed_form };

struct MasterEqOptions {
    PumpChoice pump{PumpChoice::exact};
    std::optional<double> t_final;  // transient run from the thermal state
};

/// Thrown for malformed command options (exit code 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Each command returns its rendered output; domain and oracle failures
/// propagate as exceptions and are mapped to exit codes by run_cli.
[[nodiscard]] CommandResult cmd_levels(const RunConfig& cfg, const LevelsOptions& opt, Format fmt);
[[nodiscard]] CommandResult cmd_steady(const RunConfig& cfg, Format fmt);
[[nodiscard]] CommandResult cmd_sweep_detuning(const RunConfig& cfg, const DetuningSweep& opt, Format fmt,
                                               unsigned threads);
[[nodiscard]] CommandResult cmd_sweep_temperature(const RunConfig& cfg, const TemperatureSweep& opt,
                                                  Format fmt, unsigned threads);
[[nodiscard]] CommandResult cmd_sweep_qf(const RunConfig& cfg, const QfSweep& opt, Format fmt,
                                         unsigned threads);
[[nodiscard]] CommandResult cmd_master_eq(const RunConfig& cfg, const MasterEqOptions& opt, Format fmt);
[[nodiscard]] CommandResult cmd_validate(const RunConfig& cfg, Format fmt);

/// Parses a full command line (argv[0] is the program name) and runs it.
struct Invocation {
    std::string out;
    std::string err;
    int exit_code{kExitOk};
};
[[nodiscard]] Invocation run_cli(int argc, const char* const* argv);

} // namespace flexcool::cli
