#include "spinscat/grid.hpp"

namespace spinscat {

GridSpec make_centered_grid(const std::array<int, 3>& n, const std::array<double, 3>& d) {
    GridSpec g;
    g.n = n;
    g.d = d;
    for (int a = 0; a < 3; ++a) g.origin[a] = -0.5 * (n[a] - 1) * d[a];
    validate_grid(g);
    return g;
}

void validate_grid(const GridSpec& grid) {
    static const char* axis_names[3] = {"x", "y", "z"};
    for (int a = 0; a < 3; ++a) {
        if (grid.n[a] < 8)
            throw ConfigError(std::string("grid: axis ") + axis_names[a] +
                              " needs at least 8 cells, got " + std::to_string(grid.n[a]));
        if (!(grid.d[a] > 0.0))
            throw ConfigError(std::string("grid: non-positive spacing on axis ") + axis_names[a]);
    }
}

const char* region_name(Region r) {
    switch (r) {
        case Region::TF: return "TF";
        case Region::Transition: return "transition";
        case Region::SF: return "SF";
        case Region::ABC: return "ABC";
    }
    return "?";
}

RegionLayout build_layout(const GridSpec& grid, const LayoutWidths& widths) {
    validate_grid(grid);
    static const char* axis_names[3] = {"x", "y", "z"};
    if (widths.abc < 1 || widths.sf < 1 || widths.transition < 1)
        throw ConfigError("layout: every shell width must be at least 1 cell");
    if (widths.sf < 2)
        throw ConfigError("layout: SF shell needs at least 2 cells to host a virtual surface");

    RegionLayout lay;
    lay.n = grid.n;
    lay.widths = widths;
    const int per_side = widths.abc + widths.sf + widths.transition;
    for (int a = 0; a < 3; ++a) {
        if (2 * per_side >= grid.n[a])
            throw ConfigError(std::string("layout: shell widths (") + std::to_string(per_side) +
                              " per side) exceed half of axis " + axis_names[a] + " (" +
                              std::to_string(grid.n[a]) + " cells)");
        lay.sf_box[a] = {widths.abc, grid.n[a] - 1 - widths.abc};
        lay.transition_box[a] = {widths.abc + widths.sf, grid.n[a] - 1 - widths.abc - widths.sf};
        lay.tf_box[a] = {per_side, grid.n[a] - 1 - per_side};
        lay.vs_lo[a] = widths.abc + widths.sf / 2;
        lay.vs_hi[a] = grid.n[a] - 1 - (widths.abc + widths.sf / 2);
    }
    return lay;
}

}  // namespace spinscat
