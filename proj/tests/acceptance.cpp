// Acceptance suite: one line per criterion, exit status 0 only if all pass.
//
// Usage: agentheat_acceptance [scratch_dir]

#include "agentheat/cli.hpp"
#include "agentheat/engine.hpp"
#include "agentheat/output.hpp"

#include "reference_model.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace agentheat;

namespace {

struct Outcome {
    bool pass{true};
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        pass = pass && ok;
        detail += (detail.empty() ? "" : "; ") + std::string(ok ? "" : "FAILED ") + what;
    }
};

std::string num(double v) { return format_double(v); }

std::filesystem::path scratch_root = std::filesystem::temp_directory_path() / "agentheat_acceptance";

std::vector<double> field(const SimState& st)
{
    const auto t = st.lattice.temperatures();
    return {t.begin(), t.end()};
}

Material plate() { return {1.5, 1000.0, 1500.0}; }

Scenario plate_scenario(const std::string& name)
{
    Scenario s;
    s.name = name;
    s.grid = {41, 41, 0.001};
    s.material = plate();
    s.dt = 0.005;
    return s;
}

struct StepHook : RunObserver {
    std::function<void(const SimState&)> step, snapshot;
    void on_step(const SimState& s) override
    {
        if (step) step(s);
    }
    void on_snapshot(const SimState& s) override
    {
        if (snapshot) snapshot(s);
    }
};

// 1. Engine vs naive reference, bit-exact, for several worker counts.
Outcome oracle_equivalence()
{
    Outcome out;
    std::mt19937_64 rng(20210901);
    std::uniform_real_distribution<double> lam(0.01, 2.0), temp(0.0, 100.0);
    Scenario s;
    s.name = "oracle";
    s.grid = {8, 8, 0.001};
    s.material = plate();
    s.dt = 0.005;
    for (int j = 0; j < 8; ++j) {
        for (int i = 0; i < 8; ++i) {
            s.material_regions.push_back({region::Point{i, j}, {lam(rng), 1000.0, 1500.0}});
            s.initial_overrides.push_back({region::Point{i, j}, temp(rng)});
        }
    }
    const auto ref = reference::simulate(s, 100);
    for (int workers : {1, 2, 8}) {
        auto st = init_state(s);
        run(st, 100, workers);
        std::size_t mismatches = 0;
        for (int j = 0; j < 8; ++j)
            for (int i = 0; i < 8; ++i) mismatches += st.lattice.temperature(i, j) != ref.t[j][i];
        out.require(mismatches == 0, "workers=" + std::to_string(workers) + " mismatches=" + std::to_string(mismatches));
    }
    return out;
}

// 2. Linear boundary source: approach to the source temperature, monotone heating.
Outcome fig2_reproduction()
{
    Outcome out;
    auto st = init_state(builtin("fig2_linear_source"));
    std::vector<double> previous = field(st);
    std::size_t decreases = 0, samples = 0;
    StepHook hook;
    hook.step = [&](const SimState& s) {
        if (s.step_index % 1000 != 0) return;
        const auto t = s.lattice.temperatures();
        for (std::size_t k = 0; k < t.size(); ++k) decreases += t[k] < previous[k];
        previous.assign(t.begin(), t.end());
        ++samples;
    };
    run(st, 200000, hook);
    double worst = 0.0;
    for (double t : st.lattice.temperatures()) worst = std::max(worst, std::abs(t - 20.0));
    out.require(worst < 0.1, "max|T-20| at 200000 steps = " + num(worst) + " (need < 0.1)");
    out.require(decreases == 0, "non-decreasing over " + std::to_string(samples) + " snapshots, decreases=" +
                                    std::to_string(decreases));
    if (worst >= 0.1) {
        // Report where the plate does get within 0.1 of the source.
        while (worst >= 0.1 && st.step_index < 1000000) {
            advance(st, 1000, 1);
            worst = 0.0;
            for (double t : st.lattice.temperatures()) worst = std::max(worst, std::abs(t - 20.0));
        }
        out.detail += "; max|T-20| < 0.1 first reached at step " + std::to_string(st.step_index) + " (t=" +
                      num(st.time()) + " s)";
    }
    return out;
}

bool d4_invariant(const SimState& st)
{
    const int n = st.scenario.grid.nx;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double t = st.lattice.temperature(i, j);
            if (t != st.lattice.temperature(n - 1 - i, j) || t != st.lattice.temperature(i, n - 1 - j) ||
                t != st.lattice.temperature(j, i) || t != st.lattice.temperature(n - 1 - j, n - 1 - i))
                return false;
        }
    }
    return true;
}

// 3. Point source at the center: D4 symmetry and the source holding the maximum.
Outcome fig3_symmetry()
{
    Outcome out;
    auto st = init_state(builtin("fig3_point_source"));
    bool max_ok = true;
    std::vector<std::int64_t> checked;
    StepHook hook;
    hook.step = [&](const SimState& s) {
        const auto d = diagnostics(s);
        max_ok = max_ok && d.t_max == 50.0 && s.lattice.temperature(20, 20) == 50.0;
        if (s.step_index == 1 || s.step_index == 100 || s.step_index == 10000) {
            out.require(d4_invariant(s), "D4 at step " + std::to_string(s.step_index));
            checked.push_back(s.step_index);
        }
    };
    run(st, 10000, hook);
    out.require(checked.size() == 3, "checked steps 1, 100, 10000");
    out.require(max_ok, "t_max = 50 at center for every step");
    return out;
}

// 4. Quasilinear self-heating: slow start, sharp rise.
Outcome fig4_convexity()
{
    Outcome out;
    auto st = init_state(builtin("fig4_combustion"));
    std::vector<double> mean(2001);
    StepHook hook;
    hook.step = [&](const SimState& s) { mean[static_cast<std::size_t>(s.step_index)] = diagnostics(s).t_mean; };
    run(st, 2000, hook);
    const double early = mean[500] - mean[0];
    const double late = mean[2000] - mean[1500];
    out.require(late > 10.0 * early, "gain[1500,2000]=" + num(late) + " vs 10*gain[0,500]=" + num(10.0 * early) +
                                         " (ratio " + num(late / early) + ")");
    return out;
}

// 5. Uniform field with gamma = k*T: conduction vanishes, closed-form growth.
Outcome uniform_combustion()
{
    Outcome out;
    auto s = plate_scenario("uniform_combustion");
    s.initial_temperature = 1.0;
    s.sources.push_back({region::All{}, law::VolumetricLinear{3e5}});
    auto st = init_state(s);
    run(st, 1000);
    const double expected = std::pow(1.0 + 3e5 * s.dt / (1000.0 * 1500.0), 1000);
    double worst = 0.0;
    for (double t : st.lattice.temperatures()) worst = std::max(worst, std::abs(t - expected) / expected);
    out.require(worst <= 1e-12, "max relative error vs closed form = " + num(worst) + " (<= 1e-12)");
    return out;
}

Scenario random_field(const std::string& name, bool heterogeneous, std::uint64_t seed)
{
    auto s = plate_scenario(name);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> temp(0.0, 100.0), lam(0.01, 2.0);
    for (int j = 0; j < 41; ++j) {
        for (int i = 0; i < 41; ++i) {
            s.initial_overrides.push_back({region::Point{i, j}, temp(rng)});
            if (heterogeneous) s.material_regions.push_back({region::Point{i, j}, {lam(rng), 1000.0, 1500.0}});
        }
    }
    return s;
}

// 6. Energy conservation in harmonic mode; measurable drift in receiver mode.
Outcome conservation()
{
    Outcome out;
    auto s = random_field("conservation", true, 6);
    auto drift = [&](FluxMode mode) {
        s.flux_mode = mode;
        auto st = init_state(s);
        const double e0 = total_enthalpy(st.lattice);
        run(st, 10000);
        return std::abs(total_enthalpy(st.lattice) - e0) / std::abs(e0);
    };
    const double harmonic = drift(FluxMode::harmonic);
    const double receiver = drift(FluxMode::receiver);
    out.require(harmonic <= 1e-9, "harmonic drift=" + num(harmonic) + " (<= 1e-9)");
    out.require(receiver > 1e-6, "receiver drift=" + num(receiver) + " (> 1e-6)");
    return out;
}

// 7. Maximum principle below the stability limit, checkerboard growth above it.
Outcome maximum_principle()
{
    Outcome out;
    auto s = random_field("max_principle", false, 7);
    auto st = init_state(s);
    const auto d0 = diagnostics(st);
    bool inside = true;
    StepHook hook;
    hook.step = [&](const SimState& x) {
        const auto d = diagnostics(x);
        inside = inside && d.t_min >= d0.t_min && d.t_max <= d0.t_max;
    };
    run(st, 10000, hook);
    out.require(inside, "dt=0.005: field within [" + num(d0.t_min) + ", " + num(d0.t_max) + "] for 10000 steps");

    auto cb = plate_scenario("checkerboard");
    cb.dt = 0.3;
    cb.initial_temperature = 10.0;
    for (int j = 0; j < 41; ++j)
        for (int i = 0; i < 41; ++i)
            if ((i + j) % 2 == 0) cb.initial_overrides.push_back({region::Point{i, j}, 11.0});
    auto cst = init_state(cb);
    auto amplitude = [](const SimState& x) {
        const auto d = diagnostics(x);
        double a = 0.0;
        for (double t : x.lattice.temperatures()) a = std::max(a, std::abs(t - d.t_mean));
        return a;
    };
    std::vector<double> amp{amplitude(cst)};
    for (int k = 0; k < 50; ++k) {
        step(cst);
        amp.push_back(amplitude(cst));
    }
    bool grows = true;
    for (std::size_t k = 1; k < amp.size(); ++k) grows = grows && amp[k] > amp[k - 1];
    out.require(stability_limit(plate(), 0.001) < 0.3, "0.3 s exceeds limit " + num(stability_limit(plate(), 0.001)) + " s");
    out.require(grows, "dt=0.3 checkerboard amplitude grows every step, " + num(amp.front()) + " -> " + num(amp.back()) +
                           " over 50 steps");
    return out;
}

double region_mean(const SimState& st, bool low)
{
    double sum = 0.0;
    int n = 0;
    for (int j = 0; j < 41; ++j) {
        for (int i = 0; i < 41; ++i) {
            if ((st.lattice.material(i, j).lambda < plate_lambda) == low) {
                sum += st.lattice.temperature(i, j);
                ++n;
            }
        }
    }
    return sum / n;
}

double far_half_mean(const SimState& st)
{
    double sum = 0.0;
    int n = 0;
    for (int j = 0; j < 41; ++j)
        for (int i = 21; i < 41; ++i) sum += st.lattice.temperature(i, j), ++n;
    return sum / n;
}

std::int64_t steps_until_far_half_reaches(const Scenario& s, double target, std::int64_t cap)
{
    auto st = init_state(s);
    while (far_half_mean(st) < target && st.step_index < cap) advance(st, 1, 1);
    return st.step_index;
}

// 8. Low-conductivity zones lag the surrounding field; the strip delays the far half.
Outcome anomalies()
{
    Outcome out;
    constexpr std::int64_t snapshot = 50000;
    for (const char* name : {"fig5_rect_anomaly", "fig6_insulating_strip"}) {
        auto s = builtin(name);
        const bool has_source = !s.sources.empty() && std::holds_alternative<law::Dirichlet>(s.sources[0].law);
        out.require(has_source, std::string(name) + " has a boundary source on the source side");
        auto st = init_state(s);
        run(st, snapshot);
        const double low = region_mean(st, true), normal = region_mean(st, false);
        out.require(low < normal, std::string(name) + " at step " + std::to_string(snapshot) + ": zone mean " + num(low) +
                                      " < normal mean " + num(normal));
    }
    auto homogeneous = builtin("fig6_insulating_strip");
    homogeneous.material_regions.clear();
    const auto t_plain = steps_until_far_half_reaches(homogeneous, 1.0, 1000000);
    const auto t_strip = steps_until_far_half_reaches(builtin("fig6_insulating_strip"), 1.0, 2 * t_plain + 1);
    out.require(t_strip >= 2 * t_plain, "far half reaches mean 1 at step " + std::to_string(t_strip) +
                                            (t_strip > 2 * t_plain ? "+" : "") + " vs homogeneous " +
                                            std::to_string(t_plain) + " (need >= 2x)");
    return out;
}

std::vector<std::pair<std::string, std::string>> read_dir(const std::filesystem::path& dir)
{
    std::vector<std::pair<std::string, std::string>> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        files.emplace_back(e.path().filename().string(), cli::read_file(e.path()).value_or(""));
    std::sort(files.begin(), files.end());
    return files;
}

// 9. Output bytes do not depend on the worker count.
Outcome format_determinism()
{
    Outcome out;
    std::vector<std::vector<std::pair<std::string, std::string>>> runs;
    for (int workers : {1, 8}) {
        const auto dir = scratch_root / ("determinism_w" + std::to_string(workers));
        std::filesystem::remove_all(dir);
        cli::RunConfig cfg;
        cfg.builtin_name = "fig6_insulating_strip";
        cfg.steps = 3000;
        cfg.snapshot_every = 500;
        cfg.workers = workers;
        cfg.csv = true;
        cfg.pgm = PgmRange{0.0, 20.0};
        cfg.out_dir = dir;
        std::ostringstream sink, err;
        out.require(cli::cmd_run(cfg, sink, err) == 0, "run with workers=" + std::to_string(workers) + " exits 0");
        runs.push_back(read_dir(dir));
    }
    const auto count = [](const auto& files, const char* ext) {
        return std::count_if(files.begin(), files.end(), [&](const auto& f) { return f.first.ends_with(ext); });
    };
    out.require(count(runs[0], ".csv") == 8 && count(runs[0], ".pgm") == 7,
                std::to_string(count(runs[0], ".csv")) + " csv and " + std::to_string(count(runs[0], ".pgm")) +
                    " pgm files");
    out.require(runs[0] == runs[1], "workers 1 vs 8 byte-identical");
    return out;
}

struct Criterion {
    const char* id;
    const char* title;
    double max_seconds;
    Outcome (*check)();
};

} // namespace

int main(int argc, char** argv)
{
    if (argc > 1) scratch_root = argv[1];
    std::filesystem::create_directories(scratch_root);

    const Criterion criteria[] = {
        {"AC1", "oracle equivalence (8x8 heterogeneous, workers 1/2/8)", 1.0, oracle_equivalence},
        {"AC2", "fig2 linear source: asymptote and monotone heating", 30.0, fig2_reproduction},
        {"AC3", "fig3 point source: D4 symmetry, center maximum", 5.0, fig3_symmetry},
        {"AC4", "fig4 combustion: sharp late rise", 5.0, fig4_convexity},
        {"AC5", "uniform combustion closed form", 1.0, uniform_combustion},
        {"AC6", "enthalpy conservation (harmonic) vs drift (receiver)", 10.0, conservation},
        {"AC7", "maximum principle and instability above the limit", 10.0, maximum_principle},
        {"AC8", "fig5/fig6 anomalous zones", 30.0, anomalies},
        {"AC9", "output determinism across worker counts", 30.0, format_determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[96];
        std::snprintf(timing, sizeof timing, "%.2f s (limit %.0f s)", seconds, c.max_seconds);
        o.require(seconds < c.max_seconds, timing);
        failed += !o.pass;
        std::printf("[%s] %s %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
