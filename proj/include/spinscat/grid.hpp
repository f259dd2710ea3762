#pragma once

#include <array>
#include <string>

#include "spinscat/errors.hpp"
#include "spinscat/vec3.hpp"

namespace spinscat {

/// Uniform dimensionless grid. Cell (i,j,k) sits at origin + (i*dx, j*dy, k*dz),
/// computed in exactly that order.
struct GridSpec {
    std::array<int, 3> n{};
    std::array<double, 3> d{};
    std::array<double, 3> origin{};

    double coord(int axis, int i) const { return origin[axis] + i * d[axis]; }
    Vec3 cell_center(int i, int j, int k) const { return {coord(0, i), coord(1, j), coord(2, k)}; }
    std::size_t cells() const {
        return static_cast<std::size_t>(n[0]) * n[1] * n[2];
    }
};

/// Grid centered on the coordinate origin. For even counts the origin falls on
/// the exact midpoint between the two middle cells, which makes index flips
/// i -> n-1-i exact reflections.
GridSpec make_centered_grid(const std::array<int, 3>& n, const std::array<double, 3>& d);

/// Validates counts and spacings.
void validate_grid(const GridSpec& grid);

enum class Region { TF, Transition, SF, ABC };

const char* region_name(Region r);

struct AxisRange {
    int lo = 0, hi = -1;  // inclusive
    bool contains(int i) const { return i >= lo && i <= hi; }
    int count() const { return hi - lo + 1; }
};

/// Shell widths, identical on both sides of every axis.
struct LayoutWidths {
    int abc = 0;
    int sf = 0;
    int transition = 0;
};

/// Nested shell decomposition of the lattice: ABC (outermost), SF, transition
/// layer, TF core, plus the six virtual-surface planes centered in the SF shell.
struct RegionLayout {
    std::array<int, 3> n{};
    LayoutWidths widths;

    std::array<AxisRange, 3> sf_box;          // everything inside the ABC shell
    std::array<AxisRange, 3> transition_box;  // everything inside the SF shell
    std::array<AxisRange, 3> tf_box;          // innermost core
    std::array<int, 3> vs_lo{};               // virtual-surface plane indices
    std::array<int, 3> vs_hi{};

    Region region_of(int i, int j, int k) const {
        if (tf_box[0].contains(i) && tf_box[1].contains(j) && tf_box[2].contains(k))
            return Region::TF;
        if (transition_box[0].contains(i) && transition_box[1].contains(j) &&
            transition_box[2].contains(k))
            return Region::Transition;
        if (sf_box[0].contains(i) && sf_box[1].contains(j) && sf_box[2].contains(k))
            return Region::SF;
        return Region::ABC;
    }
    bool in_tf(int i, int j, int k) const {
        return tf_box[0].contains(i) && tf_box[1].contains(j) && tf_box[2].contains(k);
    }
};

/// Builds the nested layout; throws ConfigError naming the offending axis when
/// the shells do not fit.
RegionLayout build_layout(const GridSpec& grid, const LayoutWidths& widths);

}  // namespace spinscat
