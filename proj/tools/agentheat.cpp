#include "agentheat/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    namespace ah = agentheat;
    CLI::App app{"agentheat: agent-lattice simulation of 2D heat conduction"};
    app.require_subcommand(1);

    ah::cli::RunConfig cfg;
    std::string scenario_path, builtin_name, pgm_range;
    std::int64_t steps = 0, snapshot_every = 0;
    double dt = 0.0;

    auto* run = app.add_subcommand("run", "Run a scenario file or a built-in experiment.\n"
                                          "Command-line overrides take precedence over scenario values.");
    auto* src = run->add_option_group("source");
    src->add_option("--scenario", scenario_path, "Scenario JSON file");
    src->add_option("--builtin", builtin_name, "Built-in scenario name (see `scenarios`)");
    src->require_option(1);
    run->add_option("--out", cfg.out_dir, "Output directory")->capture_default_str();
    auto* o_steps = run->add_option("--steps", steps, "Override number of steps")->check(CLI::NonNegativeNumber);
    auto* o_dt = run->add_option("--dt", dt, "Override time step [s]")->check(CLI::PositiveNumber);
    auto* o_every = run->add_option("--snapshot-every", snapshot_every, "Override snapshot interval (0: first/last only)")
                        ->check(CLI::NonNegativeNumber);
    run->add_option("--workers", cfg.workers, "Worker threads; results do not depend on it")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    auto* o_csv = run->add_flag("--csv,!--no-csv", "Write CSV snapshots (default from scenario)");
    auto* o_pgm = run->add_option("--pgm", pgm_range, "Write PGM snapshots with gray range <lo>:<hi>");

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "Check a scenario file and report errors and warnings");
    validate->add_option("path", validate_path, "Scenario JSON file")->required();

    std::string dump_name;
    auto* scenarios = app.add_subcommand("scenarios", "List built-in scenarios");
    scenarios->add_option("--dump", dump_name, "Print the named built-in as scenario JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : ah::cli::failure;
    }

    try {
        if (*run) {
            if (!scenario_path.empty()) cfg.scenario_path = scenario_path;
            if (!builtin_name.empty()) cfg.builtin_name = builtin_name;
            if (*o_steps) cfg.steps = steps;
            if (*o_dt) cfg.dt = dt;
            if (*o_every) cfg.snapshot_every = snapshot_every;
            if (*o_csv) cfg.csv = o_csv->as<bool>();
            if (*o_pgm) cfg.pgm = ah::cli::parse_pgm_range(pgm_range);
            return ah::cli::cmd_run(cfg, std::cout, std::cerr);
        }
        if (*validate) return ah::cli::cmd_validate(validate_path, std::cout, std::cerr);
        if (!dump_name.empty()) return ah::cli::cmd_dump(dump_name, std::cout, std::cerr);
        return ah::cli::cmd_scenarios(std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ah::cli::failure;
    }
}
