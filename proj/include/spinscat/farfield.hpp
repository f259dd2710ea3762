#pragma once

#include <array>
#include <string>
#include <vector>

#include "spinscat/grid.hpp"
#include "spinscat/lattice.hpp"
#include "spinscat/spectral.hpp"
#include "spinscat/vec3.hpp"

namespace spinscat {

/// One virtual-surface plane: complex phasor and outward normal derivative per
/// spin, sampled on the plane's lattice cells (first tangent axis slow).
struct PlaneRecord {
    int axis = 0;        // normal axis
    int side = 0;        // 0 = low face, 1 = high face
    int plane_index = 0; // lattice index along the normal axis
    double coord = 0.0;  // coordinate along the normal axis
    int t1 = 1, t2 = 2;  // tangent axes
    int n1 = 0, n2 = 0;  // samples along t1, t2
    int lo1 = 0, lo2 = 0;
    double d1 = 0.0, d2 = 0.0;
    double o1 = 0.0, o2 = 0.0;  // coordinate of the first sample along t1, t2

    std::vector<cplx> psi_u, psi_d;  // phasor
    std::vector<cplx> dn_u, dn_d;    // outward normal derivative

    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * n2 + b; }
    Vec3 point(int a, int b) const;
    Vec3 outward_normal() const;
};

/// Phasor data on the six planes closing the virtual box, for both spins.
/// The transforms treat the two spin channels independently.
struct SurfacePhasorRecord {
    std::array<PlaneRecord, 6> planes;
    int periods = 0;       // accumulation length, integer carrier periods
    double omega = 1.0;    // carrier frequency (dimensionless)
    Vec3 box_lo, box_hi;   // coordinate extents of the virtual box

    bool complete() const;
    bool inside_box(const Vec3& p) const {
        return p.x >= box_lo.x && p.x <= box_hi.x && p.y >= box_lo.y && p.y <= box_hi.y &&
               p.z >= box_lo.z && p.z <= box_hi.z;
    }
};

/// Time-harmonic averaging of a step stream into a phasor:
/// psi_hat = (1/(m*2*pi)) * sum psi(tau) e^{+i tau} dtau over m whole periods.
class PhasorAccumulator {
public:
    PhasorAccumulator(const std::array<int, 3>& shape, int periods, int steps_per_period,
                      double dtau);
    void add_step(const SpinorLattice& psi, double tau);
    bool done() const { return added_ == total_steps_; }
    const ComplexLattice& up() const { return acc_up_; }
    const ComplexLattice& down() const { return acc_down_; }
    int periods() const { return periods_; }

private:
    ComplexLattice acc_up_, acc_down_;
    int periods_, total_steps_, added_ = 0;
    double weight_;  // dtau / (m * 2 pi)
};

/// Extracts the six virtual planes from full-lattice phasors; normal
/// derivatives come from per-axis spectral differentiation of the full lattice.
SurfacePhasorRecord make_record(const ComplexLattice& phasor_up, const ComplexLattice& phasor_down,
                                const GridSpec& grid, const RegionLayout& layout,
                                SpectralField& spectral, int periods);

/// Scattered spinor phasor at a point strictly outside the virtual box:
/// Kirchhoff-Helmholtz integral with G = e^{i|r-r'|}/(4 pi |r-r'|) and outward
/// normals. Surface quadrature uses cell-centered samples with halved weights
/// on face rims so the six faces close the box without double counting.
std::pair<cplx, cplx> exterior_field(const SurfacePhasorRecord& record, const Vec3& point);

/// Far-field amplitude: psi_scat -> f * e^{i r}/r along direction khat.
std::pair<cplx, cplx> far_amplitude(const SurfacePhasorRecord& record, const Vec3& khat);

/// Record serialization: JSON manifest `<base>.json` plus raw complex128
/// little-endian plane dumps in `<base>.bin`.
void save_record(const SurfacePhasorRecord& record, const std::string& basename);
SurfacePhasorRecord load_record(const std::string& basename);

}  // namespace spinscat
