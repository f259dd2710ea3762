#pragma once

#include <array>
#include <complex>
#include <functional>
#include <string>

#include "spinscat/grid.hpp"
#include "spinscat/lattice.hpp"
#include "spinscat/vec3.hpp"

namespace spinscat {

/// Pure sampler of the dimensionless interaction field u(r) = gamma*mu_N*B(r)/E0.
using FieldSampler = std::function<Vec3(const Vec3&)>;

/// Uniformly magnetized sphere with a hard range cutoff at radius*cutoff_ratio.
/// All lengths are dimensionless (units of the reduced wavelength).
struct SphereFieldSpec {
    double strength_ratio = 0.0;  // V0/E0
    double radius = 0.0;          // sphere radius, dimensionless
    double cutoff_ratio = 1.0;    // b/a >= 1
    Vec3 axis{0.0, 1.0, 0.0};     // magnetization direction, unit

    void validate() const;
    double cutoff_radius() const { return radius * cutoff_ratio; }
};

/// Field of the magnetized sphere at one point: uniform (2/3)(V0/E0) along the
/// axis inside, dipole-like between radius and cutoff, identically zero beyond
/// the cutoff (hard step, no smoothing).
Vec3 sphere_field(const Vec3& r, const SphereFieldSpec& spec);

/// Unitary A with A^dag (sigma.u) A = diag(+|u|, -|u|). Columns are the
/// eigenvectors; u = 0 falls back to the identity with eigenvalues (0,0).
struct PauliEigen {
    std::array<std::array<cplx, 2>, 2> a;  // a[row][col]
    double eigenvalue_plus = 0.0;          // paired eigenvalue is the negative
};
PauliEigen pauli_eigenbasis(const Vec3& u);

/// Interaction field sampled at cell centers. Nonzero only inside the TF box;
/// support is tracked as an index bounding box for fast application.
struct DimensionlessPotential {
    RealLattice ux, uy, uz;
    double umax = 0.0;
    std::array<AxisRange, 3> support;  // bounding box of nonzero samples
    bool empty = true;

    Vec3 at(int i, int j, int k) const { return {ux(i, j, k), uy(i, j, k), uz(i, j, k)}; }
};

/// Samples the field at every cell center of the TF box. Any nonzero sample
/// outside the TF box is a configuration error: the interaction (including its
/// range cutoff) must fit inside the total-field region, so either enlarge the
/// grid/TF or tighten the cutoff.
DimensionlessPotential bake_potential(const FieldSampler& sampler, const GridSpec& grid,
                                      const RegionLayout& layout);

/// Voxel file exchange format for arbitrary interaction fields.
/// Header (72 bytes): magic "MAGVOX01", 3 x uint32 LE dims, 3 x float64 LE
/// spacings, 3 x float64 LE origin, 4 reserved bytes. Payload: nx*ny*nz*3
/// float64 LE, x-fastest, (ux,uy,uz) interleaved per voxel.
struct VoxelField {
    std::array<int, 3> n{};
    std::array<double, 3> d{};
    std::array<double, 3> origin{};
    std::vector<double> samples;  // ((k*ny + j)*nx + i)*3 + comp

    Vec3 sample(int i, int j, int k) const {
        std::size_t base = ((static_cast<std::size_t>(k) * n[1] + j) * n[0] + i) * 3;
        return {samples[base], samples[base + 1], samples[base + 2]};
    }
};

VoxelField read_voxel_file(const std::string& path);
void write_voxel_file(const std::string& path, const VoxelField& field);

/// Trilinear interpolation between voxel centers; zero outside the sample hull.
FieldSampler load_voxel_field(const std::string& path);
FieldSampler make_voxel_sampler(VoxelField field);

}  // namespace spinscat
