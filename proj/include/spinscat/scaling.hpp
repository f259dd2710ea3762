#pragma once

#include "spinscat/errors.hpp"

namespace spinscat {

/// CODATA 2018 values, in the units this library speaks at its physical
/// boundary: meV for energies, Angstrom for lengths, seconds for time.
struct PhysicalConstants {
    double neutron_mass_kg = 1.67492749804e-27;
    double hbar_Js = 1.054571817e-34;
    double meV_J = 1.602176634e-22;
};

/// Reference scales tying the dimensionless model to physical units:
/// omega0 = E0/hbar, k0 = sqrt(2 m_n E0)/hbar, lambda_bar0 = 1/k0.
struct ScalingContext {
    double e0_mev = 0.0;
    double k0_per_angstrom = 0.0;
    double omega0_per_s = 0.0;
    double lambda_bar0_angstrom = 0.0;

    double length_to_dimensionless(double angstrom) const { return k0_per_angstrom * angstrom; }
    double length_to_physical(double dimensionless) const { return dimensionless / k0_per_angstrom; }
    double time_to_dimensionless(double seconds) const { return omega0_per_s * seconds; }
    double time_to_physical(double tau) const { return tau / omega0_per_s; }
    double energy_to_dimensionless(double mev) const { return mev / e0_mev; }
    double energy_to_physical(double ratio) const { return ratio * e0_mev; }
};

/// Builds the reference scales from the incident energy.
ScalingContext make_scaling(double e0_mev, const PhysicalConstants& pc = PhysicalConstants{});

/// Convenience inverse: scales such that k0 takes the given value.
ScalingContext make_scaling_from_k0(double k0_per_angstrom,
                                    const PhysicalConstants& pc = PhysicalConstants{});

}  // namespace spinscat
