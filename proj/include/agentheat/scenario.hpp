#pragma once

// Experiment descriptions: data model, JSON reader/writer, validation and the
// built-in plate experiments.

#include "agentheat/format.hpp"
#include "agentheat/lattice.hpp"
#include "agentheat/physics.hpp"
#include "agentheat/region.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <tuple>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace agentheat {

struct MaterialRegion {
    Region region;
    Material material;
    bool operator==(const MaterialRegion&) const = default;
};

struct TemperatureOverride {
    Region region;
    double temperature{0.0};
    bool operator==(const TemperatureOverride&) const = default;
};

struct SourceSpec {
    Region region;
    SourceLaw law;
    bool operator==(const SourceSpec&) const = default;
};

struct Probe {
    std::string name;
    Cell at;
    bool operator==(const Probe&) const = default;
};

struct PgmRange {
    double lo{0.0};
    double hi{1.0};
    bool operator==(const PgmRange&) const = default;
};

struct OutputPlan {
    /// Snapshot every this many steps; 0 means only the first and last state.
    std::int64_t snapshot_every{0};
    std::vector<Probe> probes;
    bool csv{true};
    std::optional<PgmRange> pgm;
    bool operator==(const OutputPlan&) const = default;
};

struct Scenario {
    std::string name{"scenario"};
    std::string description;
    GridSpec grid;
    Material material;
    std::vector<MaterialRegion> material_regions;
    double initial_temperature{0.0};
    std::vector<TemperatureOverride> initial_overrides; ///< applied in order, later wins
    std::vector<SourceSpec> sources;
    BoundaryLaw boundary{boundary::Insulated{}};
    FluxMode flux_mode{FluxMode::harmonic};
    double dt{0.0};
    std::int64_t steps{0};
    OutputPlan output;

    bool operator==(const Scenario&) const = default;
};

struct Issue {
    enum class Severity { error, warning };
    Severity severity{Severity::error};
    std::string path; ///< JSON-pointer style location, e.g. "/sources/0/region"
    std::string message;

    bool is_error() const { return severity == Severity::error; }
    std::string to_string() const
    {
        return std::string(is_error() ? "error" : "warning") + ": " + (path.empty() ? "/" : path) + ": " + message;
    }
};

inline bool has_errors(const std::vector<Issue>& issues)
{
    return std::any_of(issues.begin(), issues.end(), [](const Issue& i) { return i.is_error(); });
}

// ---------------------------------------------------------------------------
// Semantic checks

namespace detail {

inline std::vector<Cell> cells_or_empty(const Region& r, const GridSpec& g)
{
    return region_problem(r, g).empty() ? region_cells(r, g) : std::vector<Cell>{};
}

} // namespace detail

/// Errors that make a scenario unrunnable.
inline std::vector<Issue> check(const Scenario& s)
{
    std::vector<Issue> out;
    auto err = [&](std::string path, std::string msg) {
        out.push_back({Issue::Severity::error, std::move(path), std::move(msg)});
    };

    bool grid_ok = true;
    if (s.grid.nx < 1) err("/grid/nx", "must be >= 1"), grid_ok = false;
    if (s.grid.ny < 1) err("/grid/ny", "must be >= 1"), grid_ok = false;
    if (!(s.grid.h > 0.0)) err("/grid/h", "must be > 0"), grid_ok = false;
    if (auto p = material_problem(s.material); !p.empty()) err("/material", p);
    if (!(s.dt > 0.0)) err("/time/dt", "must be > 0");
    if (s.steps < 0) err("/time/steps", "must be >= 0");
    if (s.output.snapshot_every < 0) err("/output/snapshot_every", "must be >= 0");
    if (s.output.pgm && !(s.output.pgm->lo < s.output.pgm->hi)) err("/output/pgm", "lo must be < hi");
    if (const auto* c = std::get_if<boundary::Convective>(&s.boundary); c && !(c->alpha >= 0.0))
        err("/boundary/alpha", "must be >= 0");

    auto region_ok = [&](const Region& r, const std::string& path) {
        if (!grid_ok) return false;
        if (auto p = region_problem(r, s.grid); !p.empty()) {
            err(path, p);
            return false;
        }
        return true;
    };

    for (std::size_t k = 0; k < s.material_regions.size(); ++k) {
        const std::string base = "/material_regions/" + std::to_string(k);
        region_ok(s.material_regions[k].region, base + "/region");
        if (auto p = material_problem(s.material_regions[k].material); !p.empty()) err(base + "/material", p);
    }
    for (std::size_t k = 0; k < s.initial_overrides.size(); ++k)
        region_ok(s.initial_overrides[k].region, "/initial/overrides/" + std::to_string(k) + "/region");

    std::set<Cell> dirichlet_cells;
    for (std::size_t k = 0; k < s.sources.size(); ++k) {
        const std::string base = "/sources/" + std::to_string(k);
        const auto& src = s.sources[k];
        const bool in_bounds = region_ok(src.region, base + "/region");
        if (const auto* d = std::get_if<law::Dirichlet>(&src.law)) {
            if (auto p = schedule_problem(d->schedule); !p.empty()) err(base + "/law/schedule", p);
            if (in_bounds) {
                bool overlap = false;
                for (const auto& c : region_cells(src.region, s.grid))
                    overlap |= !dirichlet_cells.insert(c).second;
                if (overlap) err(base + "/region", describe(src.region) + " overlaps another dirichlet source");
            }
        } else if (const auto* f = std::get_if<law::Flux>(&src.law)) {
            if (auto p = schedule_problem(f->schedule); !p.empty()) err(base + "/law/schedule", p);
        }
    }

    std::set<std::string> names;
    for (std::size_t k = 0; k < s.output.probes.size(); ++k) {
        const auto& p = s.output.probes[k];
        const std::string base = "/output/probes/" + std::to_string(k);
        if (p.name.empty()) err(base + "/name", "must not be empty");
        else if (!names.insert(p.name).second) err(base + "/name", "duplicate probe name '" + p.name + "'");
        region_ok(region::Point{p.at.i, p.at.j}, base);
    }
    return out;
}

/// Warnings for a structurally valid scenario: explicit-step stability and
/// dirichlet/volumetric overlap. Empty means clean.
inline std::vector<Issue> validate(const Scenario& s)
{
    std::vector<Issue> out;
    double limit = stability_limit(s.material, s.grid.h);
    for (const auto& mr : s.material_regions) limit = std::min(limit, stability_limit(mr.material, s.grid.h));
    if (s.dt > limit) {
        out.push_back({Issue::Severity::warning, "/time/dt",
                       "dt=" + format_double(s.dt) + " s exceeds the explicit stability limit " +
                           format_double(limit) + " s"});
    }

    std::set<Cell> dirichlet;
    for (const auto& src : s.sources)
        if (std::holds_alternative<law::Dirichlet>(src.law))
            for (const auto& c : detail::cells_or_empty(src.region, s.grid)) dirichlet.insert(c);
    for (std::size_t k = 0; k < s.sources.size(); ++k) {
        const auto& src = s.sources[k];
        if (!is_volumetric(src.law)) continue;
        const auto cells = detail::cells_or_empty(src.region, s.grid);
        const auto n = std::count_if(cells.begin(), cells.end(), [&](const Cell& c) { return dirichlet.count(c) > 0; });
        if (n > 0) {
            out.push_back({Issue::Severity::warning, "/sources/" + std::to_string(k) + "/region",
                           "volumetric source overlaps " + std::to_string(n) +
                               " dirichlet agent(s); the dirichlet schedule wins there"});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON

using json = nlohmann::json;

inline json region_to_json(const Region& r)
{
    struct V {
        json operator()(const region::Point& p) const { return {{"type", "point"}, {"i", p.i}, {"j", p.j}}; }
        json operator()(const region::Rect& p) const
        {
            return {{"type", "rect"}, {"i0", p.i0}, {"j0", p.j0}, {"i1", p.i1}, {"j1", p.j1}};
        }
        json operator()(const region::Row& p) const { return {{"type", "row"}, {"j", p.j}}; }
        json operator()(const region::Column& p) const { return {{"type", "column"}, {"i", p.i}}; }
        json operator()(const region::All&) const { return {{"type", "all"}}; }
    };
    return std::visit(V{}, r);
}

inline json material_to_json(const Material& m) { return {{"lambda", m.lambda}, {"c", m.c}, {"rho", m.rho}}; }

inline json schedule_to_json(const Schedule& s)
{
    json a = json::array();
    for (const auto& k : s) a.push_back(json::array({k.t, k.value}));
    return a;
}

inline json law_to_json(const SourceLaw& l)
{
    struct V {
        json operator()(const law::Dirichlet& d) const
        {
            return {{"type", "dirichlet"}, {"schedule", schedule_to_json(d.schedule)}};
        }
        json operator()(const law::Flux& f) const { return {{"type", "flux"}, {"schedule", schedule_to_json(f.schedule)}}; }
        json operator()(const law::VolumetricConstant& v) const
        {
            return {{"type", "volumetric_constant"}, {"gamma", v.gamma}};
        }
        json operator()(const law::VolumetricLinear& v) const { return {{"type", "volumetric_linear"}, {"k", v.k}}; }
    };
    return std::visit(V{}, l);
}

inline json to_json(const Scenario& s)
{
    json j;
    j["name"] = s.name;
    if (!s.description.empty()) j["description"] = s.description;
    j["grid"] = {{"nx", s.grid.nx}, {"ny", s.grid.ny}, {"h", s.grid.h}};
    j["material"] = material_to_json(s.material);
    j["material_regions"] = json::array();
    for (const auto& mr : s.material_regions)
        j["material_regions"].push_back({{"region", region_to_json(mr.region)}, {"material", material_to_json(mr.material)}});
    json overrides = json::array();
    for (const auto& o : s.initial_overrides)
        overrides.push_back({{"region", region_to_json(o.region)}, {"temperature", o.temperature}});
    j["initial"] = {{"temperature", s.initial_temperature}, {"overrides", overrides}};
    j["sources"] = json::array();
    for (const auto& src : s.sources)
        j["sources"].push_back({{"region", region_to_json(src.region)}, {"law", law_to_json(src.law)}});
    if (const auto* c = std::get_if<boundary::Convective>(&s.boundary))
        j["boundary"] = {{"type", "convective"}, {"alpha", c->alpha}, {"t_env", c->t_env}};
    else
        j["boundary"] = {{"type", "insulated"}};
    j["flux_mode"] = s.flux_mode == FluxMode::harmonic ? "harmonic" : "receiver";
    j["time"] = {{"dt", s.dt}, {"steps", s.steps}};
    json out = {{"snapshot_every", s.output.snapshot_every}, {"csv", s.output.csv}};
    out["probes"] = json::array();
    for (const auto& p : s.output.probes) out["probes"].push_back({{"name", p.name}, {"i", p.at.i}, {"j", p.at.j}});
    if (s.output.pgm) out["pgm"] = {{"lo", s.output.pgm->lo}, {"hi", s.output.pgm->hi}};
    j["output"] = out;
    return j;
}

inline std::string serialize(const Scenario& s) { return to_json(s).dump(2) + "\n"; }

namespace detail {

/// Walks a JSON document, collecting every structural problem with its path.
class Reader {
public:
    std::vector<Issue> issues;
    /// JSON array position of each item that was read successfully, per list.
    std::vector<std::size_t> material_region_pos, override_pos, source_pos, probe_pos;

    void error(const std::string& path, std::string msg)
    {
        issues.push_back({Issue::Severity::error, path, std::move(msg)});
    }

    bool object(const json& v, const std::string& path, std::initializer_list<std::string_view> allowed)
    {
        if (!v.is_object()) {
            error(path, "expected an object");
            return false;
        }
        for (const auto& [key, _] : v.items()) {
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
                error(path + "/" + key, "unknown field '" + key + "'");
        }
        return true;
    }

    const json* member(const json& obj, const std::string& key, const std::string& path, bool required)
    {
        const auto it = obj.find(key);
        if (it == obj.end()) {
            if (required) error(path + "/" + key, "missing required field");
            return nullptr;
        }
        return &*it;
    }

    template <class T>
    bool number(const json& obj, const std::string& key, const std::string& path, T& out, bool required)
    {
        const json* v = member(obj, key, path, required);
        if (!v) return !required;
        if constexpr (std::is_integral_v<T>) {
            if (!v->is_number_integer()) {
                error(path + "/" + key, "expected an integer");
                return false;
            }
            const auto wide = v->get<std::int64_t>();
            if constexpr (sizeof(T) < sizeof(std::int64_t)) {
                if (wide < std::numeric_limits<T>::min() || wide > std::numeric_limits<T>::max()) {
                    error(path + "/" + key, "integer out of range");
                    return false;
                }
            }
            out = static_cast<T>(wide);
        } else {
            if (!v->is_number()) {
                error(path + "/" + key, "expected a number");
                return false;
            }
            out = v->get<T>();
        }
        return true;
    }

    bool string(const json& obj, const std::string& key, const std::string& path, std::string& out, bool required)
    {
        const json* v = member(obj, key, path, required);
        if (!v) return !required;
        if (!v->is_string()) {
            error(path + "/" + key, "expected a string");
            return false;
        }
        out = v->get<std::string>();
        return true;
    }

    std::optional<Region> region(const json& v, const std::string& path)
    {
        if (!v.is_object()) {
            error(path, "expected an object");
            return std::nullopt;
        }
        std::string type;
        if (!string(v, "type", path, type, true)) return std::nullopt;
        bool ok = true;
        if (type == "point") {
            region::Point p;
            ok &= object(v, path, {"type", "i", "j"});
            ok &= number(v, "i", path, p.i, true);
            ok &= number(v, "j", path, p.j, true);
            if (ok) return p;
        } else if (type == "rect") {
            region::Rect r;
            ok &= object(v, path, {"type", "i0", "j0", "i1", "j1"});
            ok &= number(v, "i0", path, r.i0, true);
            ok &= number(v, "j0", path, r.j0, true);
            ok &= number(v, "i1", path, r.i1, true);
            ok &= number(v, "j1", path, r.j1, true);
            if (ok) return r;
        } else if (type == "row") {
            region::Row r;
            ok &= object(v, path, {"type", "j"});
            ok &= number(v, "j", path, r.j, true);
            if (ok) return r;
        } else if (type == "column") {
            region::Column c;
            ok &= object(v, path, {"type", "i"});
            ok &= number(v, "i", path, c.i, true);
            if (ok) return c;
        } else if (type == "all") {
            if (object(v, path, {"type"})) return region::All{};
        } else {
            error(path + "/type", "unknown region type '" + type + "' (point, rect, row, column, all)");
        }
        return std::nullopt;
    }

    std::optional<Material> material(const json& v, const std::string& path)
    {
        if (!object(v, path, {"lambda", "c", "rho"})) return std::nullopt;
        Material m;
        bool ok = number(v, "lambda", path, m.lambda, true);
        ok &= number(v, "c", path, m.c, true);
        ok &= number(v, "rho", path, m.rho, true);
        return ok ? std::optional<Material>(m) : std::nullopt;
    }

    std::optional<Schedule> schedule(const json& obj, const std::string& path)
    {
        const json* v = member(obj, "schedule", path, true);
        if (!v) return std::nullopt;
        const std::string p = path + "/schedule";
        if (!v->is_array()) {
            error(p, "expected an array of [t, value] pairs");
            return std::nullopt;
        }
        Schedule out;
        bool ok = true;
        for (std::size_t k = 0; k < v->size(); ++k) {
            const json& knot = (*v)[k];
            if (!knot.is_array() || knot.size() != 2 || !knot[0].is_number() || !knot[1].is_number()) {
                error(p + "/" + std::to_string(k), "expected [t, value]");
                ok = false;
                continue;
            }
            out.push_back({knot[0].get<double>(), knot[1].get<double>()});
        }
        return ok ? std::optional<Schedule>(std::move(out)) : std::nullopt;
    }

    std::optional<SourceLaw> source_law(const json& v, const std::string& path)
    {
        if (!v.is_object()) {
            error(path, "expected an object");
            return std::nullopt;
        }
        std::string type;
        if (!string(v, "type", path, type, true)) return std::nullopt;
        if (type == "dirichlet" || type == "flux") {
            object(v, path, {"type", "schedule"});
            auto s = schedule(v, path);
            if (!s) return std::nullopt;
            if (type == "dirichlet") return law::Dirichlet{std::move(*s)};
            return law::Flux{std::move(*s)};
        }
        if (type == "volumetric_constant") {
            law::VolumetricConstant c;
            if (object(v, path, {"type", "gamma"}) & number(v, "gamma", path, c.gamma, true)) return c;
            return std::nullopt;
        }
        if (type == "volumetric_linear") {
            law::VolumetricLinear l;
            if (object(v, path, {"type", "k"}) & number(v, "k", path, l.k, true)) return l;
            return std::nullopt;
        }
        error(path + "/type",
              "unknown law type '" + type + "' (dirichlet, flux, volumetric_constant, volumetric_linear)");
        return std::nullopt;
    }

    template <class F>
    void array(const json& obj, const std::string& key, const std::string& path, F&& each)
    {
        const json* v = member(obj, key, path, false);
        if (!v) return;
        const std::string p = path + "/" + key;
        if (!v->is_array()) {
            error(p, "expected an array");
            return;
        }
        for (std::size_t k = 0; k < v->size(); ++k) each((*v)[k], p + "/" + std::to_string(k));
    }

    static std::size_t position(const std::string& path)
    {
        return std::stoul(path.substr(path.rfind('/') + 1));
    }

    /// Rewrites "/<list>/<k>..." so k refers to the JSON array rather than the parsed list.
    std::string original_path(const std::string& path) const
    {
        const std::pair<std::string_view, const std::vector<std::size_t>*> lists[] = {
            {"/material_regions/", &material_region_pos},
            {"/initial/overrides/", &override_pos},
            {"/sources/", &source_pos},
            {"/output/probes/", &probe_pos},
        };
        for (const auto& [prefix, pos] : lists) {
            if (path.rfind(prefix, 0) != 0) continue;
            const auto start = prefix.size();
            const auto end = path.find('/', start);
            const auto k = std::stoul(path.substr(start, end - start));
            if (k >= pos->size()) return path;
            return std::string(prefix) + std::to_string((*pos)[k]) + (end == std::string::npos ? "" : path.substr(end));
        }
        return path;
    }

    void scenario(const json& root, Scenario& s)
    {
        if (!object(root, "", {"name", "description", "grid", "material", "material_regions", "initial", "sources",
                               "boundary", "flux_mode", "time", "output"}))
            return;
        string(root, "name", "", s.name, false);
        string(root, "description", "", s.description, false);

        if (const json* g = member(root, "grid", "", true); g && object(*g, "/grid", {"nx", "ny", "h"})) {
            number(*g, "nx", "/grid", s.grid.nx, true);
            number(*g, "ny", "/grid", s.grid.ny, true);
            number(*g, "h", "/grid", s.grid.h, true);
        }
        if (const json* m = member(root, "material", "", true)) {
            if (auto mat = material(*m, "/material")) s.material = *mat;
        }
        array(root, "material_regions", "", [&](const json& v, const std::string& p) {
            if (!object(v, p, {"region", "material"})) return;
            const json* r = member(v, "region", p, true);
            const json* m = member(v, "material", p, true);
            auto reg = r ? region(*r, p + "/region") : std::nullopt;
            auto mat = m ? material(*m, p + "/material") : std::nullopt;
            if (reg && mat) {
                s.material_regions.push_back({*reg, *mat});
                material_region_pos.push_back(position(p));
            }
        });
        if (const json* init = member(root, "initial", "", false);
            init && object(*init, "/initial", {"temperature", "overrides"})) {
            number(*init, "temperature", "/initial", s.initial_temperature, false);
            array(*init, "overrides", "/initial", [&](const json& v, const std::string& p) {
                if (!object(v, p, {"region", "temperature"})) return;
                TemperatureOverride o;
                const json* r = member(v, "region", p, true);
                auto reg = r ? region(*r, p + "/region") : std::nullopt;
                if (number(v, "temperature", p, o.temperature, true) && reg) {
                    o.region = *reg;
                    s.initial_overrides.push_back(o);
                    override_pos.push_back(position(p));
                }
            });
        }
        array(root, "sources", "", [&](const json& v, const std::string& p) {
            if (!object(v, p, {"region", "law"})) return;
            const json* r = member(v, "region", p, true);
            const json* l = member(v, "law", p, true);
            auto reg = r ? region(*r, p + "/region") : std::nullopt;
            auto lw = l ? source_law(*l, p + "/law") : std::nullopt;
            if (reg && lw) {
                s.sources.push_back({*reg, *lw});
                source_pos.push_back(position(p));
            }
        });
        if (const json* b = member(root, "boundary", "", false); b && b->is_object()) {
            std::string type;
            if (string(*b, "type", "/boundary", type, true)) {
                if (type == "insulated") {
                    object(*b, "/boundary", {"type"});
                    s.boundary = boundary::Insulated{};
                } else if (type == "convective") {
                    boundary::Convective c;
                    object(*b, "/boundary", {"type", "alpha", "t_env"});
                    if (number(*b, "alpha", "/boundary", c.alpha, true) & number(*b, "t_env", "/boundary", c.t_env, true))
                        s.boundary = c;
                } else {
                    error("/boundary/type", "unknown boundary type '" + type + "' (insulated, convective)");
                }
            }
        } else if (b) {
            error("/boundary", "expected an object");
        }
        if (const json* f = member(root, "flux_mode", "", false)) {
            if (*f == "harmonic") s.flux_mode = FluxMode::harmonic;
            else if (*f == "receiver") s.flux_mode = FluxMode::receiver;
            else error("/flux_mode", "expected \"harmonic\" or \"receiver\"");
        }
        if (const json* t = member(root, "time", "", true); t && object(*t, "/time", {"dt", "steps"})) {
            number(*t, "dt", "/time", s.dt, true);
            number(*t, "steps", "/time", s.steps, true);
        }
        if (const json* o = member(root, "output", "", false);
            o && object(*o, "/output", {"snapshot_every", "probes", "csv", "pgm"})) {
            number(*o, "snapshot_every", "/output", s.output.snapshot_every, false);
            if (const json* csv = member(*o, "csv", "/output", false)) {
                if (csv->is_boolean()) s.output.csv = csv->get<bool>();
                else error("/output/csv", "expected a boolean");
            }
            array(*o, "probes", "/output", [&](const json& v, const std::string& p) {
                if (!object(v, p, {"name", "i", "j"})) return;
                Probe pr;
                bool ok = string(v, "name", p, pr.name, true);
                ok &= number(v, "i", p, pr.at.i, true);
                ok &= number(v, "j", p, pr.at.j, true);
                if (ok) {
                    s.output.probes.push_back(pr);
                    probe_pos.push_back(position(p));
                }
            });
            if (const json* pgm = member(*o, "pgm", "/output", false); pgm && !pgm->is_null()) {
                PgmRange r;
                if (object(*pgm, "/output/pgm", {"lo", "hi"}) & number(*pgm, "lo", "/output/pgm", r.lo, true) &
                    number(*pgm, "hi", "/output/pgm", r.hi, true))
                    s.output.pgm = r;
            }
        }
    }
};

} // namespace detail

namespace detail {
/// True when one path is the other or one of its ancestors.
inline bool same_field(const std::string& a, const std::string& b)
{
    const auto& [shorter, longer] = a.size() <= b.size() ? std::tie(a, b) : std::tie(b, a);
    return longer.rfind(shorter, 0) == 0 && (longer.size() == shorter.size() || longer[shorter.size()] == '/');
}
} // namespace detail

struct ParseResult {
    std::optional<Scenario> scenario; ///< set iff there are no errors
    std::vector<Issue> errors;
};

/// Parses a JSON scenario. All structural and semantic errors are reported, each with its path.
inline ParseResult parse_scenario(std::string_view text)
{
    ParseResult result;
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        result.errors.push_back({Issue::Severity::error, "", std::string("syntax error: ") + e.what()});
        return result;
    }
    Scenario s;
    detail::Reader reader;
    reader.scenario(root, s);
    result.errors = std::move(reader.issues);
    for (auto& issue : check(s)) {
        issue.path = reader.original_path(issue.path);
        // A field that failed to read is reported once, by the reader.
        const bool dup = std::any_of(result.errors.begin(), result.errors.end(),
                                     [&](const Issue& e) { return detail::same_field(issue.path, e.path); });
        if (!dup) result.errors.push_back(std::move(issue));
    }
    if (result.errors.empty()) result.scenario = std::move(s);
    return result;
}

// ---------------------------------------------------------------------------
// Built-in plate experiments: 41x41 agents, h = 1 mm, rho = 1500, C = 1000,
// lambda = 1.5, T0 = 0, insulated edges, dt = 5 ms.

struct BuiltinInfo {
    std::string_view name;
    std::string_view summary;
};

inline constexpr std::array<BuiltinInfo, 5> builtin_catalog{{
    {"fig2_linear_source", "Figure 2: plate heated by a linear source held at 20 on boundary row j=0"},
    {"fig3_point_source", "Figure 3: plate heated by a point source held at 50 at the center"},
    {"fig4_combustion", "Figure 4: quasilinear self-heating gamma=k*T started by a center heat pulse"},
    {"fig5_rect_anomaly", "Figure 5: plate with a rectangular low-conductivity zone, heated from column i=0"},
    {"fig6_insulating_strip", "Figure 6: plate split by a one-agent low-conductivity strip, heated from column i=0"},
}};

inline constexpr double plate_lambda = 1.5;
inline constexpr double anomaly_lambda = 0.015;
/// Not given by the source experiment; chosen so the late-time rise dominates within 2000 steps.
inline constexpr double combustion_k = 6.0e5;
inline constexpr double combustion_pulse = 50.0;

inline Scenario plate_base(std::string name, std::int64_t steps, std::int64_t every)
{
    Scenario s;
    s.name = std::move(name);
    s.grid = {41, 41, 0.001};
    s.material = {plate_lambda, 1000.0, 1500.0};
    s.initial_temperature = 0.0;
    s.boundary = boundary::Insulated{};
    s.flux_mode = FluxMode::harmonic;
    s.dt = 0.005;
    s.steps = steps;
    s.output.snapshot_every = every;
    s.output.probes = {{"center", {20, 20}}};
    return s;
}

inline Scenario builtin(std::string_view name)
{
    const auto constant = [](double v) { return Schedule{{0.0, v}}; };
    if (name == "fig2_linear_source" || name == "fig2") {
        auto s = plate_base("fig2_linear_source", 200000, 10000);
        s.description = std::string(builtin_catalog[0].summary);
        s.sources.push_back({region::Row{0}, law::Dirichlet{constant(20.0)}});
        s.output.probes.insert(s.output.probes.begin(), Probe{"near_source", {20, 1}});
        s.output.pgm = PgmRange{0.0, 20.0};
        return s;
    }
    if (name == "fig3_point_source" || name == "fig3") {
        auto s = plate_base("fig3_point_source", 20000, 1000);
        s.description = std::string(builtin_catalog[1].summary);
        s.sources.push_back({region::Point{20, 20}, law::Dirichlet{constant(50.0)}});
        s.output.probes.push_back({"corner", {0, 0}});
        s.output.pgm = PgmRange{0.0, 50.0};
        return s;
    }
    if (name == "fig4_combustion" || name == "fig4") {
        auto s = plate_base("fig4_combustion", 2000, 250);
        s.description = std::string(builtin_catalog[2].summary) +
                        "; k=6e5 W/(m^3 K) and pulse=50 are chosen values, not measured ones";
        s.initial_overrides.push_back({region::Point{20, 20}, combustion_pulse});
        s.sources.push_back({region::All{}, law::VolumetricLinear{combustion_k}});
        s.output.pgm = PgmRange{0.0, 10.0};
        return s;
    }
    if (name == "fig5_rect_anomaly" || name == "fig5") {
        auto s = plate_base("fig5_rect_anomaly", 100000, 10000);
        s.description = std::string(builtin_catalog[3].summary) + "; zone extent is a chosen value";
        s.material_regions.push_back({region::Rect{16, 12, 35, 31}, {anomaly_lambda, 1000.0, 1500.0}});
        s.sources.push_back({region::Column{0}, law::Dirichlet{constant(20.0)}});
        s.output.probes.push_back({"zone", {25, 21}});
        s.output.pgm = PgmRange{0.0, 20.0};
        return s;
    }
    if (name == "fig6_insulating_strip" || name == "fig6") {
        auto s = plate_base("fig6_insulating_strip", 100000, 10000);
        s.description = std::string(builtin_catalog[4].summary);
        s.material_regions.push_back({region::Column{20}, {anomaly_lambda, 1000.0, 1500.0}});
        s.sources.push_back({region::Column{0}, law::Dirichlet{constant(20.0)}});
        s.output.probes = {{"near_half", {10, 20}}, {"strip", {20, 20}}, {"far_half", {30, 20}}};
        s.output.pgm = PgmRange{0.0, 20.0};
        return s;
    }
    std::string valid;
    for (const auto& b : builtin_catalog) valid += (valid.empty() ? "" : ", ") + std::string(b.name);
    throw std::invalid_argument("unknown builtin scenario '" + std::string(name) + "'; valid names: " + valid);
}

} // namespace agentheat
