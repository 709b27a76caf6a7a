#pragma once

// Numerical kernels of the agent heat-conduction model. Everything here is a
// pure function of its arguments.

#include "agentheat/lattice.hpp"

#include <array>
#include <limits>
#include <stdexcept>
#include <variant>
#include <vector>

namespace agentheat {

/// How the conductivity of a contact between two agents is chosen.
enum class FluxMode {
    receiver, ///< receiving agent's own lambda (not antisymmetric across material interfaces)
    harmonic, ///< 2*la*lb/(la+lb), symmetric and therefore conservative
};

/// One knot of a piecewise-linear schedule: value at time t [s].
struct Knot {
    double t{0.0};
    double value{0.0};
    bool operator==(const Knot&) const = default;
};
using Schedule = std::vector<Knot>;

namespace law {
/// Agent temperature imposed by a schedule.
struct Dirichlet {
    Schedule schedule;
    bool operator==(const Dirichlet&) const = default;
};
/// Imposed heat-flow schedule [W/m^3], added next to the volumetric term.
struct Flux {
    Schedule schedule;
    bool operator==(const Flux&) const = default;
};
struct VolumetricConstant {
    double gamma{0.0}; ///< [W/m^3]
    bool operator==(const VolumetricConstant&) const = default;
};
/// gamma(T) = k*T
struct VolumetricLinear {
    double k{0.0}; ///< [W/(m^3 K)]
    bool operator==(const VolumetricLinear&) const = default;
};
} // namespace law

using SourceLaw = std::variant<law::Dirichlet, law::Flux, law::VolumetricConstant, law::VolumetricLinear>;

inline bool is_volumetric(const SourceLaw& l)
{
    return std::holds_alternative<law::VolumetricConstant>(l) || std::holds_alternative<law::VolumetricLinear>(l);
}

namespace boundary {
struct Insulated {
    bool operator==(const Insulated&) const = default;
};
/// Newton cooling toward an environment temperature.
struct Convective {
    double alpha{0.0}; ///< [W/(m^2 K)]
    double t_env{0.0};
    bool operator==(const Convective&) const = default;
};
} // namespace boundary

using BoundaryLaw = std::variant<boundary::Insulated, boundary::Convective>;

inline double interface_conductivity(double lambda_self, double lambda_nbr, FluxMode mode)
{
    if (lambda_self < 0.0 || lambda_nbr < 0.0) throw std::invalid_argument("interface_conductivity: negative lambda");
    if (mode == FluxMode::receiver) return lambda_self;
    if (lambda_self == lambda_nbr) return lambda_self;
    const double sum = lambda_self + lambda_nbr;
    if (sum == 0.0) return 0.0;
    // Product and sum are both commutative in IEEE arithmetic, so the result is
    // bit-identical for swapped arguments.
    return 2.0 * (lambda_self * lambda_nbr) / sum;
}

/// Heat flux into the agent at `t_self` from a neighbor at `t_nbr` [W/m^3].
inline double pair_flux(double lambda_eff, double t_self, double t_nbr, double h)
{
    return lambda_eff * (t_nbr - t_self) / (h * h);
}

/// Newton cooling through a missing-neighbor face, divided by h to get volumetric units.
inline double convective_flux(double alpha, double t_env, double t_self, double h)
{
    return alpha * (t_env - t_self) / h;
}

inline double boundary_flux(const BoundaryLaw& b, double t_self, double h)
{
    if (const auto* c = std::get_if<boundary::Convective>(&b)) return convective_flux(c->alpha, c->t_env, t_self, h);
    return 0.0;
}

enum Direction : int { north = 0, south = 1, east = 2, west = 3 };

/// Effective contact conductivities of one agent toward N (j+1), S (j-1), E (i+1), W (i-1).
struct NeighborLinks {
    std::array<double, 4> lambda{};
    std::array<bool, 4> present{};
};

inline NeighborLinks neighbor_links(const Lattice& lattice, int i, int j, FluxMode mode)
{
    const auto& g = lattice.spec();
    const double self = lattice.material(i, j).lambda;
    constexpr std::array<std::array<int, 2>, 4> offsets{{{0, 1}, {0, -1}, {1, 0}, {-1, 0}}};
    NeighborLinks links;
    for (int d = 0; d < 4; ++d) {
        const int ni = i + offsets[d][0];
        const int nj = j + offsets[d][1];
        if (!g.contains(ni, nj)) continue;
        links.present[d] = true;
        links.lambda[d] = interface_conductivity(self, lattice.material(ni, nj).lambda, mode);
    }
    return links;
}

/// Flux sum for agent (i, j) given precomputed links and a row-major temperature field.
/// Grouping is fixed as (N + S) + (E + W); a missing neighbor contributes the boundary flux.
inline double flux_sum(const NeighborLinks& links, const double* temps, const GridSpec& g, int i, int j,
                       const BoundaryLaw& b)
{
    const std::size_t k = g.index(i, j);
    const double self = temps[k];
    const std::size_t nx = static_cast<std::size_t>(g.nx);
    auto term = [&](int d, std::size_t nbr) {
        return links.present[d] ? pair_flux(links.lambda[d], self, temps[nbr], g.h) : boundary_flux(b, self, g.h);
    };
    // Neighbor indices are only dereferenced when present.
    const double qn = term(north, k + nx);
    const double qs = term(south, k - nx);
    const double qe = term(east, k + 1);
    const double qw = term(west, k - 1);
    return (qn + qs) + (qe + qw);
}

inline double neighbor_flux_sum(const Lattice& lattice, int i, int j, FluxMode mode, const BoundaryLaw& b)
{
    const auto links = neighbor_links(lattice, i, j, mode);
    return flux_sum(links, lattice.temperatures().data(), lattice.spec(), i, j, b);
}

/// Piecewise-linear interpolation, clamped to the end values outside the knot range.
inline double schedule_value(const Schedule& table, double t)
{
    if (table.empty()) throw std::invalid_argument("schedule_value: empty schedule");
    if (t <= table.front().t) return table.front().value;
    if (t >= table.back().t) return table.back().value;
    std::size_t hi = 1;
    while (table[hi].t < t) ++hi;
    const Knot& a = table[hi - 1];
    const Knot& b = table[hi];
    const double w = (t - a.t) / (b.t - a.t);
    return a.value + w * (b.value - a.value);
}

inline std::string schedule_problem(const Schedule& table)
{
    if (table.empty()) return "schedule must not be empty";
    for (std::size_t k = 1; k < table.size(); ++k)
        if (!(table[k].t > table[k - 1].t)) return "schedule times must be strictly increasing";
    return {};
}

/// Specific power [W/m^3] of a volumetric law at agent temperature `t_current`.
inline double volumetric_power(const SourceLaw& l, double t_current, [[maybe_unused]] double t_k)
{
    if (const auto* c = std::get_if<law::VolumetricConstant>(&l)) return c->gamma;
    if (const auto* lin = std::get_if<law::VolumetricLinear>(&l)) return lin->k * t_current;
    throw std::invalid_argument("volumetric_power: law is not volumetric");
}

/// Explicit update T + dt*(q + gamma)/(C*rho), with q + gamma summed first.
inline double apply_update(double t_old, double q_sum, double gamma, double dt, const Material& m)
{
    const double rate = (q_sum + gamma) / (m.c * m.rho);
    return t_old + dt * rate;
}

/// Largest dt for which the explicit 2D update is non-oscillating: C*rho*h^2/(4*lambda).
inline double stability_limit(const Material& m, double h)
{
    if (m.lambda == 0.0) return std::numeric_limits<double>::infinity();
    return m.c * m.rho * h * h / (4.0 * m.lambda);
}

} // namespace agentheat
