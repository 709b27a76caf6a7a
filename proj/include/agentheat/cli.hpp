#pragma once

// Command implementations behind the `agentheat` executable. Argument parsing
// lives in tools/; these functions take a filled-in config and streams so they
// can be driven from tests.

#include "agentheat/engine.hpp"
#include "agentheat/output.hpp"
#include "agentheat/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace agentheat::cli {

enum ExitCode : int { ok = 0, failure = 1, blow_up = 2 };

struct RunConfig {
    std::optional<std::string> scenario_path;
    std::optional<std::string> builtin_name;
    std::filesystem::path out_dir{"out"};
    std::optional<std::int64_t> steps;
    std::optional<double> dt;
    std::optional<std::int64_t> snapshot_every;
    int workers{1};
    std::optional<bool> csv;
    std::optional<PgmRange> pgm;
};

/// Parses "<lo>:<hi>".
inline PgmRange parse_pgm_range(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("pgm range must look like <lo>:<hi>");
    PgmRange r{parse_double(std::string_view(text).substr(0, colon)), parse_double(std::string_view(text).substr(colon + 1))};
    if (!(r.lo < r.hi)) throw std::invalid_argument("pgm range needs lo < hi");
    return r;
}

inline std::optional<std::string> read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Single `key=value` line for the final state.
inline std::string summary_line(const SimState& st)
{
    const auto d = diagnostics(st);
    return "scenario=" + st.scenario.name + " steps=" + std::to_string(st.step_index) + " t=" + format_double(d.t) +
           " min=" + format_double(d.t_min) + " max=" + format_double(d.t_max) + " mean=" + format_double(d.t_mean) +
           " enthalpy=" + format_double(d.enthalpy);
}

inline std::optional<Scenario> load_scenario(const RunConfig& cfg, std::ostream& err)
{
    if (cfg.scenario_path.has_value() == cfg.builtin_name.has_value()) {
        err << "error: give exactly one of --scenario <path> or --builtin <name>\n";
        return std::nullopt;
    }
    if (cfg.builtin_name) {
        try {
            return builtin(*cfg.builtin_name);
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << "\n";
            return std::nullopt;
        }
    }
    const auto text = read_file(*cfg.scenario_path);
    if (!text) {
        err << "error: cannot read " << *cfg.scenario_path << "\n";
        return std::nullopt;
    }
    auto parsed = parse_scenario(*text);
    for (const auto& e : parsed.errors) err << e.to_string() << "\n";
    return parsed.scenario;
}

inline int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.workers < 1) {
        err << "error: --workers must be >= 1\n";
        return failure;
    }
    auto scenario = load_scenario(cfg, err);
    if (!scenario) return failure;

    if (cfg.steps) scenario->steps = *cfg.steps;
    if (cfg.dt) scenario->dt = *cfg.dt;
    if (cfg.snapshot_every) scenario->output.snapshot_every = *cfg.snapshot_every;
    if (cfg.csv) scenario->output.csv = *cfg.csv;
    if (cfg.pgm) scenario->output.pgm = cfg.pgm;

    if (const auto errors = check(*scenario); !errors.empty()) {
        for (const auto& e : errors) err << e.to_string() << "\n";
        return failure;
    }
    for (const auto& w : validate(*scenario)) err << w.to_string() << "\n";

    auto state = init_state(*scenario);
    try {
        DirectorySink sink(cfg.out_dir, scenario->output.csv, scenario->output.pgm);
        run(state, scenario->steps, sink, cfg.workers);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "; output in " << cfg.out_dir.string() << " is partial\n";
        return failure;
    }
    out << summary_line(state) << "\n";
    if (!all_finite(state)) {
        err << "error: temperature field contains non-finite values (unstable time step?)\n";
        return blow_up;
    }
    return ok;
}

inline int cmd_validate(const std::filesystem::path& path, std::ostream& out, std::ostream& err)
{
    const auto text = read_file(path);
    if (!text) {
        err << "error: cannot read " << path.string() << "\n";
        return failure;
    }
    const auto parsed = parse_scenario(*text);
    for (const auto& e : parsed.errors) out << e.to_string() << "\n";
    if (!parsed.scenario) {
        out << path.string() << ": " << parsed.errors.size() << " error(s)\n";
        return failure;
    }
    const auto warnings = validate(*parsed.scenario);
    for (const auto& w : warnings) out << w.to_string() << "\n";
    out << path.string() << ": ok, " << warnings.size() << " warning(s)\n";
    return ok;
}

inline int cmd_scenarios(std::ostream& out)
{
    for (const auto& b : builtin_catalog) out << b.name << "  " << b.summary << "\n";
    return ok;
}

/// Prints the JSON form of a built-in so it can be edited and run with --scenario.
inline int cmd_dump(const std::string& name, std::ostream& out, std::ostream& err)
{
    try {
        out << serialize(builtin(name));
        return ok;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return failure;
    }
}

} // namespace agentheat::cli
