#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spinscat/farfield.hpp"
#include "spinscat/grid.hpp"
#include "spinscat/incidence.hpp"
#include "spinscat/lattice.hpp"
#include "spinscat/magnetics.hpp"
#include "spinscat/spectral.hpp"

namespace spinscat {

/// Multiplicative absorbing mask, the separable product of three 1D profiles
/// Gamma(d) = exp(-U0 * dtau / cosh^2(alpha * d)), d = cell distance to the
/// nearer grid boundary along that axis.
struct AbcMask {
    std::array<std::vector<double>, 3> g;
    double u0 = 0.0, alpha = 0.0, dtau = 0.0;

    double at(int i, int j, int k) const { return g[0][i] * g[1][j] * g[2][k]; }
    static AbcMask identity(const std::array<int, 3>& n);
};

AbcMask abc_mask(const RegionLayout& layout, double u0, double alpha_per_cell, double dtau);

enum class TaperProfile { Quintic, Nonic };

/// Separable taper zeta = zx*zy*zz with analytic first and second derivatives:
/// exactly 0 in SF/ABC, exactly 1 in TF, a C2 (quintic) or C4 (nonic)
/// smoothstep across the transition layer.
struct TaperField {
    std::array<std::vector<double>, 3> z, dz, d2z;  // per-axis, vs dimensionless coord
    TaperProfile profile = TaperProfile::Quintic;

    double zeta(int i, int j, int k) const { return z[0][i] * z[1][j] * z[2][k]; }
    Vec3 grad(int i, int j, int k) const {
        return {dz[0][i] * z[1][j] * z[2][k], z[0][i] * dz[1][j] * z[2][k],
                z[0][i] * z[1][j] * dz[2][k]};
    }
    double laplacian(int i, int j, int k) const {
        return d2z[0][i] * z[1][j] * z[2][k] + z[0][i] * d2z[1][j] * z[2][k] +
               z[0][i] * z[1][j] * d2z[2][k];
    }
};

TaperField taper_field(const GridSpec& grid, const RegionLayout& layout,
                       TaperProfile profile = TaperProfile::Quintic);

/// K = -i * eta * Sum_axis InverseFT[k_axis^2 FT[psi]] per spin component.
SpinorLattice kinetic_increment(const SpinorLattice& psi, const GridSpec& grid, double eta);
void kinetic_increment_into(SpectralField& spectral, const SpinorLattice& psi, double eta,
                            SpinorLattice& out);

/// P = -i (sigma . u) psi, pointwise; nonzero only on the potential support.
SpinorLattice potential_increment(const SpinorLattice& psi, const DimensionlessPotential& u);

/// I = -i [lap(zeta) psi_inc + 2 grad(zeta) . grad(psi_inc)] on transition cells.
SpinorLattice injection_increment(const IncidentSpec& spec, const TaperField& taper,
                                  const GridSpec& grid, const RegionLayout& layout, double tau);

/// Sufficient time-step bound: [pi^2 (1/dx^2 + 1/dy^2 + 1/dz^2) + umax]^-1.
double max_stable_dt(const GridSpec& grid, double umax);

struct EngineParams {
    GridSpec grid;
    LayoutWidths widths;
    IncidentSpec incidence;

    FieldSampler field;  // empty -> free propagation
    double abc_u0 = 5.0;
    double abc_alpha = 0.3;
    bool abc_enabled = true;
    TaperProfile taper = TaperProfile::Quintic;

    double safety = 0.9;                 // fraction of the stability bound
    std::optional<double> dtau_override; // bypasses the bound (stability studies)

    int accumulate_periods = 2;          // phasor window, >= 2
    double steady_tol = 1e-5;            // per-period phasor change on the surfaces
    int min_settle_periods = 2;          // after the ramp, before steady checks
    int max_periods = 128;
    std::optional<int> fixed_transient_periods;  // skip steady detection

    double divergence_max_abs = 1e3;
    int check_stride = 25;
};

struct RegionNorms {
    double tf = 0, transition = 0, sf = 0, abc = 0;
};

struct EngineDiagnostics {
    long step = 0;
    double tau = 0.0;
    double dtau = 0.0;
    int steps_per_period = 0;
    double stability_bound = 0.0;
    double umax = 0.0;
    double eta = 0.0;
    bool diverged = false;
    std::vector<double> steady_trace;  // per-period phasor change on the surfaces
    int transient_periods = 0;         // periods marched before accumulation
};

struct RunResult {
    SurfacePhasorRecord record;
    EngineDiagnostics diagnostics;
};

/// Leapfrog time marcher:
///   psi^{n+1} = Gamma * { psi^{n-1} + 2 dtau [K + P + I]^n },
/// with the mask multiplying the whole bracket. Both start levels are zero and
/// the incident wave is ramped in. Single-writer: one caller advances a given
/// engine; the internal pointwise work is data-parallel over lattice slabs.
class Engine {
public:
    explicit Engine(EngineParams params);
    ~Engine();
    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;

    void step();
    void steps(int count);

    /// Marches through ramp and settling, detects the steady state from the
    /// per-period phasor change on the virtual surfaces, then accumulates the
    /// phasor over whole periods and assembles the surface record.
    RunResult run();

    const SpinorLattice& current() const;
    const SpinorLattice& previous() const;
    /// Test hook: overwrite both levels (e.g. to launch a free mode).
    void seed(const SpinorLattice& prev, const SpinorLattice& curr);

    const EngineDiagnostics& diagnostics() const;
    const GridSpec& grid() const;
    const RegionLayout& layout() const;
    const DimensionlessPotential& potential() const;
    const TaperField& taper() const;
    double dtau() const;
    double eta() const;

    RegionNorms region_norms() const;
    double max_abs() const;

    /// Raw complex128 LE dumps of both levels plus a JSON sidecar.
    void save_checkpoint(const std::string& basename) const;
    void load_checkpoint(const std::string& basename);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace spinscat
