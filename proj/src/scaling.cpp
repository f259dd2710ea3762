#include "spinscat/scaling.hpp"

#include <cmath>

namespace spinscat {

ScalingContext make_scaling(double e0_mev, const PhysicalConstants& pc) {
    if (!(e0_mev > 0.0)) throw std::domain_error("make_scaling: reference energy must be positive");
    ScalingContext ctx;
    ctx.e0_mev = e0_mev;
    const double e0_J = e0_mev * pc.meV_J;
    ctx.omega0_per_s = e0_J / pc.hbar_Js;
    const double k0_per_m = std::sqrt(2.0 * pc.neutron_mass_kg * e0_J) / pc.hbar_Js;
    ctx.k0_per_angstrom = k0_per_m * 1e-10;
    ctx.lambda_bar0_angstrom = 1.0 / ctx.k0_per_angstrom;
    return ctx;
}

ScalingContext make_scaling_from_k0(double k0_per_angstrom, const PhysicalConstants& pc) {
    if (!(k0_per_angstrom > 0.0))
        throw std::domain_error("make_scaling_from_k0: wavenumber must be positive");
    const double k0_per_m = k0_per_angstrom * 1e10;
    const double e0_J = pc.hbar_Js * pc.hbar_Js * k0_per_m * k0_per_m / (2.0 * pc.neutron_mass_kg);
    return make_scaling(e0_J / pc.meV_J, pc);
}

}  // namespace spinscat
