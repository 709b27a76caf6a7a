#pragma once

// Synchronous time loop over the agent lattice.
//
// Every step reads only the current temperature buffer and writes only the
// scratch buffer, so the rows of the lattice can be split into contiguous
// bands and computed by independent workers. The per-agent arithmetic does not
// depend on the band layout, which makes results bit-identical for any worker
// count.

#include "agentheat/lattice.hpp"
#include "agentheat/physics.hpp"
#include "agentheat/region.hpp"
#include "agentheat/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <barrier>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace agentheat {

struct SimState {
    Scenario scenario;
    Lattice lattice;             ///< current buffer
    std::vector<double> scratch; ///< next buffer
    std::int64_t step_index{0};

    std::vector<NeighborLinks> links;
    std::vector<int> dirichlet_source; ///< per agent: index into scenario.sources, or -1
    /// Non-dirichlet sources acting on each agent, CSR layout, declaration order.
    std::vector<std::uint32_t> source_offsets;
    std::vector<std::uint32_t> source_ids;

    double time() const { return static_cast<double>(step_index) * scenario.dt; }
};

struct Diagnostics {
    double t{0.0};
    double t_min{0.0};
    double t_max{0.0};
    double t_mean{0.0};
    double enthalpy{0.0};
};

/// Builds the state at step 0. Throws std::invalid_argument if the scenario has errors;
/// warnings (e.g. an unstable dt) are accepted.
inline SimState init_state(const Scenario& s)
{
    if (auto errors = check(s); !errors.empty()) {
        std::string msg = "scenario '" + s.name + "' is invalid:";
        for (const auto& e : errors) msg += "\n  " + e.to_string();
        throw std::invalid_argument(msg);
    }

    SimState st{s, new_lattice(s.grid, s.initial_temperature, s.material), {}, 0, {}, {}, {}, {}};
    const GridSpec& g = s.grid;
    const std::size_t n = g.size();

    for (const auto& mr : s.material_regions) set_material_region(st.lattice, mr.region, mr.material);
    for (const auto& o : s.initial_overrides)
        for (const auto& c : region_cells(o.region, g)) st.lattice.set_temperature(c.i, c.j, o.temperature);

    st.links.resize(n);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) st.links[g.index(i, j)] = neighbor_links(st.lattice, i, j, s.flux_mode);

    st.dirichlet_source.assign(n, -1);
    std::vector<std::vector<std::uint32_t>> per_agent(n);
    for (std::size_t k = 0; k < s.sources.size(); ++k) {
        const bool dirichlet = std::holds_alternative<law::Dirichlet>(s.sources[k].law);
        for (const auto& c : region_cells(s.sources[k].region, g)) {
            if (dirichlet) st.dirichlet_source[g.index(c.i, c.j)] = static_cast<int>(k);
            else per_agent[g.index(c.i, c.j)].push_back(static_cast<std::uint32_t>(k));
        }
    }
    st.source_offsets.reserve(n + 1);
    st.source_offsets.push_back(0);
    for (const auto& ids : per_agent) {
        st.source_ids.insert(st.source_ids.end(), ids.begin(), ids.end());
        st.source_offsets.push_back(static_cast<std::uint32_t>(st.source_ids.size()));
    }

    auto temps = st.lattice.temperatures();
    for (std::size_t k = 0; k < n; ++k) {
        if (const int d = st.dirichlet_source[k]; d >= 0)
            temps[k] = schedule_value(std::get<law::Dirichlet>(s.sources[d].law).schedule, 0.0);
    }
    st.scratch.assign(n, 0.0);
    return st;
}

namespace detail {

/// Computes next-buffer rows [j_begin, j_end) from the current buffer.
inline void compute_rows(SimState& st, int j_begin, int j_end)
{
    const Scenario& s = st.scenario;
    const GridSpec& g = s.grid;
    const double t_now = st.time();
    const double t_next = static_cast<double>(st.step_index + 1) * s.dt;
    const double* cur = st.lattice.temperatures().data();
    const auto materials = st.lattice.materials();
    double* next = st.scratch.data();

    for (int j = j_begin; j < j_end; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const std::size_t k = g.index(i, j);
            if (const int d = st.dirichlet_source[k]; d >= 0) {
                next[k] = schedule_value(std::get<law::Dirichlet>(s.sources[d].law).schedule, t_next);
                continue;
            }
            const double q = flux_sum(st.links[k], cur, g, i, j, s.boundary);
            double gamma = 0.0;
            for (auto e = st.source_offsets[k]; e < st.source_offsets[k + 1]; ++e) {
                const SourceLaw& l = s.sources[st.source_ids[e]].law;
                if (const auto* f = std::get_if<law::Flux>(&l)) gamma += schedule_value(f->schedule, t_now);
                else gamma += volumetric_power(l, cur[k], t_now);
            }
            next[k] = apply_update(cur[k], q, gamma, s.dt, materials[k]);
        }
    }
}

inline void finish_step(SimState& st)
{
    st.lattice.swap_temperatures(st.scratch);
    ++st.step_index;
}

} // namespace detail

/// Advances `n` synchronous steps using `workers` row bands, calling `after_step`
/// once after every completed step. An exception from `after_step` stops the loop
/// and is rethrown once all workers have joined.
inline void advance(SimState& st, std::int64_t n, int workers,
                    const std::function<void(const SimState&)>& after_step = {})
{
    if (n <= 0) return;
    const int ny = st.scenario.grid.ny;
    workers = std::clamp(workers, 1, ny);

    if (workers == 1) {
        for (std::int64_t k = 0; k < n; ++k) {
            detail::compute_rows(st, 0, ny);
            detail::finish_step(st);
            if (after_step) after_step(st);
        }
        return;
    }

    std::atomic<bool> stop{false};
    std::exception_ptr failure;
    std::int64_t done = 0;
    auto on_completion = [&]() noexcept {
        detail::finish_step(st);
        try {
            if (after_step) after_step(st);
        } catch (...) {
            failure = std::current_exception();
            stop.store(true, std::memory_order_relaxed);
        }
        if (++done == n) stop.store(true, std::memory_order_relaxed);
    };
    std::barrier sync(workers, on_completion);

    auto band = [&](int w) {
        const int j0 = static_cast<int>(static_cast<long long>(ny) * w / workers);
        const int j1 = static_cast<int>(static_cast<long long>(ny) * (w + 1) / workers);
        while (!stop.load(std::memory_order_relaxed)) {
            detail::compute_rows(st, j0, j1);
            sync.arrive_and_wait();
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers - 1));
        for (int w = 1; w < workers; ++w) pool.emplace_back(band, w);
        band(0);
    }
    if (failure) std::rethrow_exception(failure);
}

inline void step(SimState& st, int workers = 1) { advance(st, 1, workers); }

/// Receives the states a run emits. Default implementations ignore everything.
class RunObserver {
public:
    virtual ~RunObserver() = default;
    /// Called for the starting state and after every step.
    virtual void on_step(const SimState&) {}
    /// Called for the starting state, every snapshot interval, and the final state.
    virtual void on_snapshot(const SimState&) {}
};

/// Runs `n` steps, reporting to `observer`. Snapshots fall on multiples of the
/// scenario's snapshot interval; the final state is always snapshotted.
inline void run(SimState& st, std::int64_t n, RunObserver& observer, int workers = 1)
{
    if (n < 0) throw std::invalid_argument("run: negative step count");
    const std::int64_t every = st.scenario.output.snapshot_every;
    std::int64_t last_snapshot = st.step_index;
    observer.on_step(st);
    observer.on_snapshot(st);
    advance(st, n, workers, [&](const SimState& s) {
        observer.on_step(s);
        if (every > 0 && s.step_index % every == 0) {
            observer.on_snapshot(s);
            last_snapshot = s.step_index;
        }
    });
    if (last_snapshot != st.step_index) observer.on_snapshot(st);
}

inline void run(SimState& st, std::int64_t n, int workers = 1)
{
    RunObserver none;
    run(st, n, none, workers);
}

/// Min, max and mean over the current buffer, row-major. NaN anywhere makes all three NaN.
inline Diagnostics diagnostics(const SimState& st)
{
    const auto t = st.lattice.temperatures();
    Diagnostics d;
    d.t = st.time();
    d.t_min = std::numeric_limits<double>::infinity();
    d.t_max = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    bool nan = false;
    for (const double v : t) {
        nan |= std::isnan(v);
        d.t_min = std::min(d.t_min, v);
        d.t_max = std::max(d.t_max, v);
        sum += v;
    }
    d.t_mean = sum / static_cast<double>(t.size());
    if (nan) d.t_min = d.t_max = d.t_mean = std::numeric_limits<double>::quiet_NaN();
    d.enthalpy = total_enthalpy(st.lattice);
    return d;
}

inline bool all_finite(const SimState& st)
{
    const auto t = st.lattice.temperatures();
    return std::all_of(t.begin(), t.end(), [](double v) { return std::isfinite(v); });
}

} // namespace agentheat
