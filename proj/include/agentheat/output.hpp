#pragma once

#include "agentheat/engine.hpp"
#include "agentheat/format.hpp"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace agentheat {

/// Temperature grid at one instant; values row-major, row j = 0 first.
struct SnapshotFrame {
    double t{0.0};
    int nx{0};
    int ny{0};
    std::vector<double> values;

    double at(int i, int j) const { return values.at(static_cast<std::size_t>(j) * nx + i); }
    bool operator==(const SnapshotFrame&) const = default;
};

inline SnapshotFrame make_frame(const SimState& st)
{
    const auto t = st.lattice.temperatures();
    return {st.time(), st.scenario.grid.nx, st.scenario.grid.ny, {t.begin(), t.end()}};
}

/// "# t=<t>" followed by ny lines of nx comma-separated values.
inline std::string write_snapshot_csv(const SnapshotFrame& f)
{
    std::string out = "# t=" + format_double(f.t) + "\n";
    for (int j = 0; j < f.ny; ++j) {
        for (int i = 0; i < f.nx; ++i) {
            if (i > 0) out += ',';
            out += format_double(f.at(i, j));
        }
        out += '\n';
    }
    return out;
}

inline SnapshotFrame parse_snapshot_csv(std::string_view text)
{
    SnapshotFrame f;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line.rfind("# t=", 0) != 0) throw std::invalid_argument("snapshot: missing '# t=' header");
    f.t = parse_double(std::string_view(line).substr(4));
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        int cols = 0;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            f.values.push_back(parse_double(std::string_view(line).substr(start, comma - start)));
            ++cols;
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (f.ny == 0) f.nx = cols;
        else if (cols != f.nx) throw std::invalid_argument("snapshot: ragged row " + std::to_string(f.ny));
        ++f.ny;
    }
    return f;
}

inline std::string probe_csv_header(const std::vector<Probe>& probes)
{
    std::string out = "t";
    for (const auto& p : probes) out += "," + p.name;
    return out + "\n";
}

inline std::string write_probe_csv_row(double t, const std::vector<double>& values)
{
    std::string out = format_double(t);
    for (const double v : values) out += "," + format_double(v);
    return out + "\n";
}

inline std::vector<double> probe_values(const SimState& st)
{
    std::vector<double> v;
    for (const auto& p : st.scenario.output.probes) v.push_back(st.lattice.temperature(p.at.i, p.at.j));
    return v;
}

/// Maps T to round-half-up(255 * clamp((T - lo)/(hi - lo), 0, 1)). NaN maps to 0.
inline std::uint8_t gray_level(double t, double lo, double hi)
{
    double x = (t - lo) / (hi - lo);
    if (!(x > 0.0)) x = 0.0;
    if (x > 1.0) x = 1.0;
    return static_cast<std::uint8_t>(std::floor(255.0 * x + 0.5));
}

/// Binary P5 image, nx wide and ny tall, row j = 0 first.
inline std::string write_pgm(const SnapshotFrame& f, double lo, double hi)
{
    if (!(lo < hi)) throw std::invalid_argument("write_pgm: need lo < hi");
    std::string out = "P5\n" + std::to_string(f.nx) + " " + std::to_string(f.ny) + "\n255\n";
    out.reserve(out.size() + f.values.size());
    for (const double v : f.values) out += static_cast<char>(gray_level(v, lo, hi));
    return out;
}

inline std::string snapshot_stem(const std::string& scenario, std::int64_t step)
{
    std::string k = std::to_string(step);
    if (k.size() < 8) k.insert(0, 8 - k.size(), '0');
    return scenario + "_step" + k;
}

/// Writes snapshots (CSV and/or PGM) and the probe time series into a directory.
class DirectorySink : public RunObserver {
public:
    DirectorySink(std::filesystem::path dir, bool csv, std::optional<PgmRange> pgm)
        : dir_(std::move(dir)), csv_(csv), pgm_(pgm)
    {
        std::filesystem::create_directories(dir_);
    }

    void on_step(const SimState& st) override
    {
        if (st.scenario.output.probes.empty()) return;
        if (!probes_.is_open()) {
            const auto path = dir_ / (st.scenario.name + "_probes.csv");
            probes_.open(path, std::ios::binary | std::ios::trunc);
            probes_ << probe_csv_header(st.scenario.output.probes);
            check(probes_, path);
        }
        probes_ << write_probe_csv_row(st.time(), probe_values(st));
        check(probes_, dir_ / (st.scenario.name + "_probes.csv"));
    }

    void on_snapshot(const SimState& st) override
    {
        const auto frame = make_frame(st);
        const auto stem = snapshot_stem(st.scenario.name, st.step_index);
        if (csv_) write_file(dir_ / (stem + ".csv"), write_snapshot_csv(frame));
        if (pgm_) write_file(dir_ / (stem + ".pgm"), write_pgm(frame, pgm_->lo, pgm_->hi));
        probes_.flush();
    }

    std::vector<std::filesystem::path> written() const { return written_; }

private:
    static void check(const std::ostream& os, const std::filesystem::path& path)
    {
        if (!os) throw std::runtime_error("failed writing " + path.string());
    }

    void write_file(const std::filesystem::path& path, const std::string& bytes)
    {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        f << bytes;
        f.close();
        check(f, path);
        written_.push_back(path);
    }

    std::filesystem::path dir_;
    bool csv_;
    std::optional<PgmRange> pgm_;
    std::ofstream probes_;
    std::vector<std::filesystem::path> written_;
};

} // namespace agentheat
