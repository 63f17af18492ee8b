#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>
#include <vector>

#include "flexcool/constants.hpp"
#include "flexcool/cooling_model.hpp"
#include "flexcool/hyperfine.hpp"
#include "flexcool/lindblad_oracle.hpp"
#include "format.hpp"

#ifndef FLEXCOOL_VERSION
#define FLEXCOOL_VERSION "unknown"
#endif

namespace flexcool::cli {

namespace c = flexcool::constants;
namespace cm = flexcool::cooling_model;
namespace lo = flexcool::lindblad_oracle;
using nlohmann::json;

namespace {

// Evaluates fn(i) for i in [0, count) on up to `threads` workers. Results are
// stored by index, so the output never depends on the thread count.
std::vector<double> parallel_map(std::size_t count, unsigned threads,
                                 const std::function<double(std::size_t)>& fn) {
    std::vector<double> out(count);
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points) {
    std::vector<double> g(points);
    for (std::size_t i = 0; i < points; ++i) {
        g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    g.back() = hi;
    return g;
}

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
    std::vector<double> g(points);
    const double a = std::log10(lo);
    const double b = std::log10(hi);
    for (std::size_t i = 0; i < points; ++i) {
        g[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1));
    }
    g.front() = lo;
    g.back() = hi;
    return g;
}

json json_array(const std::vector<double>& v) {
    json arr = json::array();
    for (double x : v) arr.push_back(json_number(x));
    return arr;
}

json envelope(std::string_view command, const RunConfig& cfg) {
    json j;
    j["command"] = std::string(command);
    j["version"] = FLEXCOOL_VERSION;
    j["config"] = to_json(cfg);
    return j;
}

json axis(std::string_view name, std::string_view unit, const std::vector<double>& grid) {
    return json{{"name", std::string(name)}, {"unit", std::string(unit)}, {"grid", json_array(grid)}};
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

json check_json(const coupling::ValidityCheck& check) {
    return json{{"name", check.name},
                {"ratio", json_number(check.ratio)},
                {"threshold", json_number(check.threshold)},
                {"evaluated", check.evaluated},
                {"pass", check.pass}};
}

json validity_json(const coupling::ValidityReport& r) {
    return json{{"small_angle", check_json(r.small_angle)},
                {"small_amplitude", check_json(r.small_amplitude)},
                {"weak_field", check_json(r.weak_field)},
                {"all_pass", r.all_pass()}};
}

std::string state_column(const hyperfine::HyperfineState& s) {
    std::string m = s.mF > 0 ? "+" + std::to_string(s.mF) : std::to_string(s.mF);
    return "E_F" + std::to_string(s.F) + "_mF" + m + "_over_h_hz";
}

void require(bool ok, const std::string& message) {
    if (!ok) throw UsageError(message);
}

void require_format(Format fmt, std::initializer_list<Format> allowed, std::string_view command) {
    for (Format f : allowed) {
        if (f == fmt) return;
    }
    throw UsageError(std::string(command) + ": unsupported --format");
}

} // namespace

CommandResult cmd_levels(const RunConfig& cfg, const LevelsOptions& opt, Format fmt) {
    require_format(fmt, {Format::csv, Format::json}, "levels");
    require(opt.points >= 2, "levels: --points must be >= 2");
    require(std::isfinite(opt.b_min) && std::isfinite(opt.b_max) && opt.b_min >= 0.0 && opt.b_max > opt.b_min,
            "levels: need 0 <= b-min < b-max");

    const auto grid = linear_grid(opt.b_min, opt.b_max, opt.points);
    std::vector<std::string> header{"B_tesla"};
    for (const auto& s : hyperfine::all_states) header.push_back(state_column(s));
    header.emplace_back("omega_L_linear_hz");
    header.emplace_back("omega_L_exact_hz");

    std::vector<std::vector<double>> rows;
    for (double b : grid) {
        const hyperfine::StaticField field(b);
        std::vector<double> row{b};
        for (const auto& s : hyperfine::all_states) row.push_back(hyperfine::zeeman_energy(s, field) / c::h);
        row.push_back(over_2pi(hyperfine::larmor_frequency(field)));
        row.push_back(over_2pi(hyperfine::exact_transition_frequency(field)));
        rows.push_back(std::move(row));
    }

    if (fmt == Format::csv) {
        CsvWriter csv(to_json(cfg), header);
        for (const auto& r : rows) csv.row(r);
        return {csv.str()};
    }
    json j = envelope("levels", cfg);
    j["axes"] = json::array({axis("B_tesla", "T", grid)});
    json cols;
    for (std::size_t k = 1; k < header.size(); ++k) {
        std::vector<double> col;
        for (const auto& r : rows) col.push_back(r[k]);
        cols[header[k]] = json_array(col);
    }
    j["values"] = cols;
    return {render_json(j)};
}

CommandResult cmd_steady(const RunConfig& cfg, Format fmt) {
    require_format(fmt, {Format::json, Format::csv}, "steady");
    const auto params = resolve(cfg);
    const auto r = cm::steady_phonon_full(params);

    const std::vector<std::pair<std::string, double>> fields{
        {"n_th", r.n_th},
        {"n_steady", r.n_steady},
        {"n_steady_chain", r.n_steady_chain},
        {"cooling_factor", r.cooling_factor},
        {"kappa_per_s", r.kappa},
        {"g0_rad_s", r.g0},
        {"gN_rad_s", r.gN},
        {"rabi_rad_s", r.rabi},
        {"tau_s", r.tau},
        {"gamma_per_s", r.gamma},
        {"zeta_s", r.zeta},
        {"a_qm_m", r.a_qm},
        {"gradient_T_per_m", r.gradient},
        {"thermal_amplitude_m", r.thermal_amplitude},
        {"detuning_x", r.detuning_x},
        {"detuning_over_2pi_hz", over_2pi(params.detuning_delta)},
        {"mu_c_over_2pi_hz", over_2pi(params.mu_c / c::hbar)},
        {"bias_field_T", r.bias_field},
    };

    if (fmt == Format::csv) {
        std::vector<std::string> header;
        std::vector<double> row;
        for (const auto& [k, v] : fields) {
            header.push_back(k);
            row.push_back(v);
        }
        CsvWriter csv(to_json(cfg), header);
        csv.row(row);
        csv.note("validity", r.validity.all_pass() ? "pass" : "fail");
        return {csv.str()};
    }
    json j = envelope("steady", cfg);
    json result;
    for (const auto& [k, v] : fields) result[k] = json_number(v);
    j["result"] = result;
    j["validity"] = validity_json(r.validity);
    return {render_json(j)};
}

CommandResult cmd_sweep_detuning(const RunConfig& cfg, const DetuningSweep& opt, Format fmt, unsigned threads) {
    require_format(fmt, {Format::csv, Format::json}, "sweep-detuning");
    require(opt.points >= 2, "sweep-detuning: --points must be >= 2");
    require(opt.x_min > 0.0 && opt.x_max < 1.0 && opt.x_min < opt.x_max,
            "sweep-detuning: need 0 < x-min < x-max < 1");

    const auto base = resolve(cfg);
    const auto grid = linear_grid(opt.x_min, opt.x_max, opt.points);
    const auto values = parallel_map(grid.size(), threads, [&](std::size_t i) {
        auto p = base;
        p.detuning_delta = grid[i] * p.mu_c / c::hbar;
        return cm::steady_phonon_full(p).n_steady;
    });
    const double n_th = cm::thermal_phonon_number(base.osc.omega_m, base.osc.temperature_T);
    const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
    auto analytic = base;
    analytic.detuning_delta = cm::optimal_detuning(base.mu_c);
    const double n_best = cm::steady_phonon_full(analytic).n_steady;

    if (fmt == Format::csv) {
        CsvWriter csv(to_json(cfg), {"x", "n_steady"});
        for (std::size_t i = 0; i < grid.size(); ++i) csv.row({grid[i], values[i]});
        csv.note("grid-minimum", "x=" + format_number(grid[best]) + ",n_steady=" + format_number(values[best]));
        csv.note("best-point", "x=" + format_number(1.0 / 3.0) + ",n_steady=" + format_number(n_best));
        csv.note("n_th", format_number(n_th));
        return {csv.str()};
    }
    json j = envelope("sweep-detuning", cfg);
    j["axes"] = json::array({axis("x", "hbar*delta/mu_c", grid)});
    j["values"] = json_array(values);
    j["summary"] = json{{"grid_min_x", json_number(grid[best])},
                        {"grid_min_n_steady", json_number(values[best])},
                        {"best_x", json_number(1.0 / 3.0)},
                        {"best_n_steady", json_number(n_best)},
                        {"n_th", json_number(n_th)}};
    return {render_json(j)};
}

CommandResult cmd_sweep_temperature(const RunConfig& cfg, const TemperatureSweep& opt, Format fmt,
                                    unsigned threads) {
    require_format(fmt, {Format::csv, Format::json}, "sweep-temperature");
    require(opt.points >= 2, "sweep-temperature: --points must be >= 2");
    require(opt.t_min >= 0.0 && opt.t_max > opt.t_min && std::isfinite(opt.t_max),
            "sweep-temperature: need 0 <= t-min < t-max");

    const auto base = resolve(cfg);
    const auto grid = linear_grid(opt.t_min, opt.t_max, opt.points);
    std::vector<double> n_th(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) n_th[i] = cm::thermal_phonon_number(base.osc.omega_m, grid[i]);
    const auto values = parallel_map(grid.size(), threads, [&](std::size_t i) {
        auto p = base;
        p.osc.temperature_T = grid[i];
        return cm::steady_phonon_full(p).n_steady;
    });
    const double threshold = cm::ground_state_threshold_temperature(base);

    if (fmt == Format::csv) {
        CsvWriter csv(to_json(cfg), {"T_K", "n_th", "n_steady"});
        for (std::size_t i = 0; i < grid.size(); ++i) csv.row({grid[i], n_th[i], values[i]});
        csv.note("ground-state-threshold-K", format_number(threshold));
        return {csv.str()};
    }
    json j = envelope("sweep-temperature", cfg);
    j["axes"] = json::array({axis("T_K", "K", grid)});
    j["n_th"] = json_array(n_th);
    j["values"] = json_array(values);
    j["summary"] = json{{"ground_state_threshold_K", json_number(threshold)}};
    return {render_json(j)};
}

CommandResult cmd_sweep_qf(const RunConfig& cfg, const QfSweep& opt, Format fmt, unsigned threads) {
    require_format(fmt, {Format::csv, Format::json}, "sweep-qf");
    require(opt.points >= 2, "sweep-qf: --points must be >= 2");
    require(opt.q_min > 0.0 && opt.q_max > opt.q_min && opt.f_min_hz > 0.0 && opt.f_max_hz > opt.f_min_hz,
            "sweep-qf: need 0 < q-min < q-max and 0 < f-min < f-max");
    require(opt.temperature_K >= 0.0 && std::isfinite(opt.temperature_K), "sweep-qf: --temperature must be >= 0");

    auto base = resolve(cfg);
    base.osc.temperature_T = opt.temperature_K;
    const auto qs = log_grid(opt.q_min, opt.q_max, opt.points);
    const auto fs = log_grid(opt.f_min_hz, opt.f_max_hz, opt.points);
    auto n_at = [&](double q, double f) {
        return cm::steady_phonon_full(cm::rescale_oscillator(base, angular(f), q)).n_steady;
    };
    const auto flat = parallel_map(qs.size() * fs.size(), threads, [&](std::size_t k) {
        return n_at(qs[k / fs.size()], fs[k % fs.size()]);
    });

    // n_steady rises with f at fixed Q; bisect log f for the n_steady = 1 crossing.
    std::vector<std::pair<double, double>> contour;
    for (std::size_t i = 0; i < qs.size(); ++i) {
        double lo = std::log10(opt.f_min_hz);
        double hi = std::log10(opt.f_max_hz);
        const double n_lo = n_at(qs[i], opt.f_min_hz);
        const double n_hi = n_at(qs[i], opt.f_max_hz);
        if (!(n_lo < 1.0 && n_hi > 1.0)) continue;
        for (int it = 0; it < 100 && hi - lo > 1e-12; ++it) {
            const double mid = 0.5 * (lo + hi);
            (n_at(qs[i], std::pow(10.0, mid)) < 1.0 ? lo : hi) = mid;
        }
        contour.emplace_back(qs[i], std::pow(10.0, 0.5 * (lo + hi)));
    }

    if (fmt == Format::csv) {
        CsvWriter csv(to_json(cfg), {"quality_Q", "f_m_hz", "n_steady"});
        for (std::size_t k = 0; k < flat.size(); ++k) csv.row({qs[k / fs.size()], fs[k % fs.size()], flat[k]});
        for (const auto& [q, f] : contour) {
            csv.note("contour", "quality_Q=" + format_number(q) + ",f_m_hz=" + format_number(f));
        }
        csv.note("temperature_K", format_number(opt.temperature_K));
        return {csv.str()};
    }
    json j = envelope("sweep-qf", cfg);
    j["axes"] = json::array({axis("quality_Q", "1", qs), axis("f_m_hz", "Hz", fs)});
    json matrix = json::array();
    for (std::size_t i = 0; i < qs.size(); ++i) {
        std::vector<double> row(flat.begin() + static_cast<std::ptrdiff_t>(i * fs.size()),
                                flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * fs.size()));
        matrix.push_back(json_array(row));
    }
    j["values"] = matrix;
    json pts = json::array();
    for (const auto& [q, f] : contour) pts.push_back(json{{"quality_Q", json_number(q)}, {"f_m_hz", json_number(f)}});
    j["contour"] = pts;
    j["temperature_K"] = json_number(opt.temperature_K);
    return {render_json(j)};
}

CommandResult cmd_master_eq(const RunConfig& cfg, const MasterEqOptions& opt, Format fmt) {
    require_format(fmt, {Format::json, Format::csv}, "master-eq");
    const auto params = resolve(cfg);
    if (!bec_trap::in_resonance_shell(params.detuning_delta, params.mu_c)) {
        throw std::domain_error("master-eq: detuning_x must lie in [0, 1]");
    }
    const auto chain = cm::coupling_chain(params);

    lo::OracleConfig oc;
    oc.g = chain.gN;
    oc.tau = chain.tau;
    oc.gamma = bec_trap::transition_rate(params.detuning_delta, params.mu_c, chain.rabi_Omega);
    oc.kappa = cm::decay_rate(params.osc.omega_m, params.osc.quality_Q);
    oc.n_th = cm::thermal_phonon_number(params.osc.omega_m, params.osc.temperature_T);
    oc.n_max = cfg.n_max;
    oc.dt = cfg.dt_s;
    oc.pump = opt.pump == PumpChoice::exact ? lo::PumpModel::exact_rabi : lo::PumpModel::closed_form_eighth;

    const auto steady = lo::steady_populations(oc);
    const double oracle_mean = lo::mean_phonon(steady);
    const double closed_form = cm::steady_phonon_basic(oc.n_th, oc.g, oc.tau, oc.gamma, oc.kappa);
    const double small_angle = oc.n_th / (1.0 + oc.gamma * oc.g * oc.g * oc.tau * oc.tau / (4.0 * oc.kappa));
    const auto residual = lo::approximation_residual(steady, oc.g, oc.tau);

    std::optional<double> transient_mean;
    if (opt.t_final) {
        auto run = oc;
        run.n_max = steady.n_max();
        if (run.dt <= 0.0) run.dt = 0.05 / std::max(run.max_exit_rate(), 1e-300);
        const double steps = std::ceil(*opt.t_final / run.dt);
        if (steps * static_cast<double>(run.n_max + 1) > 5e9) {
            throw lo::OracleError("master-eq: transient run too long (" + format_number(steps) +
                                  " steps); shorten --t-final or n_max");
        }
        transient_mean = lo::mean_phonon(
            lo::evolve_populations(lo::PopulationVector::thermal(oc.n_th, run.n_max), run, *opt.t_final));
    }

    const std::vector<std::pair<std::string, double>> fields{
        {"g_rad_s", oc.g},
        {"tau_s", oc.tau},
        {"gamma_per_s", oc.gamma},
        {"kappa_per_s", oc.kappa},
        {"n_th", oc.n_th},
        {"n_max", static_cast<double>(steady.n_max())},
        {"tail_mass", steady.tail_mass()},
        {"oracle_mean", oracle_mean},
        {"closed_form_mean", closed_form},
        {"oracle_over_closed_form", oracle_mean / closed_form},
        {"small_angle_quarter_mean", small_angle},
        {"residual_exact", residual.exact},
        {"residual_closed_form", residual.closed_form_approx},
        {"residual_ratio", residual.ratio},
    };
    const std::string pump = opt.pump == PumpChoice::exact ? "exact" : "closed-form";

    if (fmt == Format::csv) {
        std::vector<std::string> header;
        std::vector<double> row;
        for (const auto& [k, v] : fields) {
            header.push_back(k);
            row.push_back(v);
        }
        if (transient_mean) {
            header.emplace_back("transient_mean");
            row.push_back(*transient_mean);
        }
        CsvWriter csv(to_json(cfg), header);
        csv.row(row);
        csv.note("pump", pump);
        return {csv.str()};
    }
    json j = envelope("master-eq", cfg);
    json result;
    for (const auto& [k, v] : fields) result[k] = json_number(v);
    if (transient_mean) {
        result["transient_mean"] = json_number(*transient_mean);
        result["t_final_s"] = json_number(*opt.t_final);
    }
    result["pump"] = pump;
    j["result"] = result;
    return {render_json(j)};
}

CommandResult cmd_validate(const RunConfig& cfg, Format fmt) {
    require_format(fmt, {Format::text, Format::json}, "validate");
    const auto params = resolve(cfg);
    const auto report = cm::validity_report(params);
    const auto qf = cm::qf_quantum_criterion(params.osc.omega_m, params.osc.quality_Q, params.osc.temperature_T);
    const bool ok = report.all_pass() && qf.pass;
    const int code = ok ? kExitOk : kExitValidity;

    if (fmt == Format::json) {
        json j = envelope("validate", cfg);
        j["validity"] = validity_json(report);
        j["qf_criterion"] = json{{"product_hz", json_number(qf.product)},
                                 {"bound_hz", json_number(qf.bound)},
                                 {"pass", qf.pass}};
        j["all_pass"] = ok;
        return {render_json(j), code};
    }

    std::ostringstream out;
    auto line = [&](const coupling::ValidityCheck& check) {
        out << check.name << ": ratio=" << (check.evaluated ? format_number(check.ratio) : "n/a")
            << " threshold=" << format_number(check.threshold) << " "
            << (check.evaluated ? (check.pass ? "PASS" : "FAIL") : "SKIPPED") << "\n";
    };
    line(report.small_angle);
    line(report.small_amplitude);
    line(report.weak_field);
    out << "Q*f > k_B*T/h: product=" << format_number(qf.product) << " bound=" << format_number(qf.bound) << " "
        << (qf.pass ? "PASS" : "FAIL") << "\n";
    out << "overall: " << (ok ? "PASS" : "FAIL") << "\n";
    return {out.str(), code};
}

} // namespace flexcool::cli
