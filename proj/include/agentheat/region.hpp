#pragma once

#include "agentheat/lattice.hpp"

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace agentheat {

namespace region {
struct Point {
    int i{0}, j{0};
    bool operator==(const Point&) const = default;
};
/// Inclusive on both corners.
struct Rect {
    int i0{0}, j0{0}, i1{0}, j1{0};
    bool operator==(const Rect&) const = default;
};
struct Row {
    int j{0};
    bool operator==(const Row&) const = default;
};
struct Column {
    int i{0};
    bool operator==(const Column&) const = default;
};
struct All {
    bool operator==(const All&) const = default;
};
} // namespace region

using Region = std::variant<region::Point, region::Rect, region::Row, region::Column, region::All>;

inline std::string describe(const Region& r)
{
    struct V {
        std::string operator()(const region::Point& p) const
        {
            return "point(" + std::to_string(p.i) + ", " + std::to_string(p.j) + ")";
        }
        std::string operator()(const region::Rect& p) const
        {
            return "rect(" + std::to_string(p.i0) + ", " + std::to_string(p.j0) + ", " + std::to_string(p.i1) +
                   ", " + std::to_string(p.j1) + ")";
        }
        std::string operator()(const region::Row& p) const { return "row(" + std::to_string(p.j) + ")"; }
        std::string operator()(const region::Column& p) const { return "column(" + std::to_string(p.i) + ")"; }
        std::string operator()(const region::All&) const { return "all"; }
    };
    return std::visit(V{}, r);
}

/// Empty string if `r` fits inside `g`, otherwise why not.
inline std::string region_problem(const Region& r, const GridSpec& g)
{
    const std::string grid = std::to_string(g.nx) + "x" + std::to_string(g.ny) + " grid";
    struct V {
        const GridSpec& g;
        const std::string& grid;
        const Region& r;
        std::string outside() const { return describe(r) + " exceeds " + grid; }
        std::string operator()(const region::Point& p) const { return g.contains(p.i, p.j) ? "" : outside(); }
        std::string operator()(const region::Rect& p) const
        {
            if (p.i0 > p.i1 || p.j0 > p.j1) return describe(r) + " has inverted extents";
            return g.contains(p.i0, p.j0) && g.contains(p.i1, p.j1) ? "" : outside();
        }
        std::string operator()(const region::Row& p) const { return p.j >= 0 && p.j < g.ny ? "" : outside(); }
        std::string operator()(const region::Column& p) const { return p.i >= 0 && p.i < g.nx ? "" : outside(); }
        std::string operator()(const region::All&) const { return ""; }
    };
    return std::visit(V{g, grid, r}, r);
}

/// Cells covered by `r`, row-major (j outer, i inner), duplicate-free.
inline std::vector<Cell> region_cells(const Region& r, const GridSpec& g)
{
    if (auto p = region_problem(r, g); !p.empty()) throw std::out_of_range(p);
    int i0 = 0, j0 = 0, i1 = g.nx - 1, j1 = g.ny - 1;
    if (auto* p = std::get_if<region::Point>(&r)) {
        i0 = i1 = p->i;
        j0 = j1 = p->j;
    } else if (auto* q = std::get_if<region::Rect>(&r)) {
        i0 = q->i0;
        j0 = q->j0;
        i1 = q->i1;
        j1 = q->j1;
    } else if (auto* row = std::get_if<region::Row>(&r)) {
        j0 = j1 = row->j;
    } else if (auto* col = std::get_if<region::Column>(&r)) {
        i0 = i1 = col->i;
    }
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(i1 - i0 + 1) * static_cast<std::size_t>(j1 - j0 + 1));
    for (int j = j0; j <= j1; ++j)
        for (int i = i0; i <= i1; ++i) cells.push_back({i, j});
    return cells;
}

inline void set_material_region(Lattice& lattice, const Region& r, const Material& m)
{
    const auto cells = region_cells(r, lattice.spec());
    set_material_cells(lattice, cells, m);
}

} // namespace agentheat
