#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace agentheat {

/// Geometry of a rectangular agent lattice with uniform spacing.
struct GridSpec {
    int nx{1};     ///< agents along x (columns)
    int ny{1};     ///< agents along y (rows)
    double h{1.0}; ///< coordinate step [m]

    std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }
    bool contains(int i, int j) const { return i >= 0 && i < nx && j >= 0 && j < ny; }
    std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(i);
    }

    bool operator==(const GridSpec&) const = default;
};

/// Per-agent material properties.
struct Material {
    double lambda{0.0}; ///< thermal conductivity [W/(m K)]
    double c{1.0};      ///< specific heat [J/(kg K)]
    double rho{1.0};    ///< density [kg/m^3]

    bool operator==(const Material&) const = default;
};

/// Lattice coordinate: i is the column (x), j the row (y).
struct Cell {
    int i{0};
    int j{0};

    auto operator<=>(const Cell&) const = default;
};

enum class AgentKind { interior, edge, corner };

inline const char* to_string(AgentKind k)
{
    switch (k) {
    case AgentKind::interior: return "interior";
    case AgentKind::edge: return "edge";
    case AgentKind::corner: return "corner";
    }
    return "?";
}

/// Throws std::invalid_argument naming the first offending field.
inline void check_grid(const GridSpec& g)
{
    if (g.nx < 1) throw std::invalid_argument("grid.nx must be >= 1, got " + std::to_string(g.nx));
    if (g.ny < 1) throw std::invalid_argument("grid.ny must be >= 1, got " + std::to_string(g.ny));
    if (!(g.h > 0.0)) throw std::invalid_argument("grid.h must be > 0");
}

/// Returns an empty string for a valid material, otherwise a description of the problem.
inline std::string material_problem(const Material& m)
{
    if (!(m.lambda >= 0.0)) return "lambda must be >= 0";
    if (!(m.c > 0.0)) return "c must be > 0";
    if (!(m.rho > 0.0)) return "rho must be > 0";
    return {};
}

inline void check_material(const Material& m)
{
    if (auto p = material_problem(m); !p.empty()) throw std::invalid_argument("material: " + p);
}

/// Agent grid with row-major temperature and material fields; origin at agent (0, 0).
class Lattice {
public:
    Lattice(const GridSpec& spec, double initial_temperature, const Material& default_material)
        : spec_(spec)
    {
        check_grid(spec);
        check_material(default_material);
        temperature_.assign(spec.size(), initial_temperature);
        material_.assign(spec.size(), default_material);
    }

    const GridSpec& spec() const { return spec_; }
    std::size_t size() const { return temperature_.size(); }

    double temperature(int i, int j) const { return temperature_.at(checked(i, j)); }
    void set_temperature(int i, int j, double t) { temperature_.at(checked(i, j)) = t; }
    const Material& material(int i, int j) const { return material_.at(checked(i, j)); }
    void set_material(int i, int j, const Material& m) { material_.at(checked(i, j)) = m; }

    std::span<const double> temperatures() const { return temperature_; }
    std::span<double> temperatures() { return temperature_; }
    std::span<const Material> materials() const { return material_; }

    void swap_temperatures(std::vector<double>& other) { temperature_.swap(other); }

private:
    std::size_t checked(int i, int j) const
    {
        if (!spec_.contains(i, j)) {
            throw std::out_of_range("agent (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") outside " + std::to_string(spec_.nx) + "x" +
                                    std::to_string(spec_.ny) + " lattice");
        }
        return spec_.index(i, j);
    }

    GridSpec spec_;
    std::vector<double> temperature_;
    std::vector<Material> material_;
};

inline Lattice new_lattice(const GridSpec& spec, double initial_temperature, const Material& default_material)
{
    return Lattice(spec, initial_temperature, default_material);
}

/// Assigns `m` to every listed cell. Validates all cells before touching the lattice.
inline void set_material_cells(Lattice& lattice, std::span<const Cell> cells, const Material& m)
{
    check_material(m);
    const auto& g = lattice.spec();
    for (const auto& c : cells) {
        if (!g.contains(c.i, c.j)) {
            throw std::out_of_range("region cell (" + std::to_string(c.i) + ", " + std::to_string(c.j) +
                                    ") outside " + std::to_string(g.nx) + "x" + std::to_string(g.ny) +
                                    " lattice");
        }
    }
    for (const auto& c : cells) lattice.set_material(c.i, c.j, m);
}

inline AgentKind classify(const GridSpec& g, int i, int j)
{
    if (!g.contains(i, j)) {
        throw std::out_of_range("classify: (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") outside grid");
    }
    const bool x_extreme = i == 0 || i == g.nx - 1;
    const bool y_extreme = j == 0 || j == g.ny - 1;
    if (x_extreme && y_extreme) return AgentKind::corner;
    if (x_extreme || y_extreme) return AgentKind::edge;
    return AgentKind::interior;
}

/// Sum of C*rho*T*h^2 over all agents, row-major. Units: J/m (per unit depth).
inline double total_enthalpy(const Lattice& lattice)
{
    const double area = lattice.spec().h * lattice.spec().h;
    const auto t = lattice.temperatures();
    const auto m = lattice.materials();
    double sum = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) sum += m[k].c * m[k].rho * t[k] * area;
    return sum;
}

} // namespace agentheat
