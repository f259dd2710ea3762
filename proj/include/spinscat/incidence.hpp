#pragma once

#include <complex>
#include <string>

#include "spinscat/lattice.hpp"
#include "spinscat/vec3.hpp"

namespace spinscat {

/// Normalized two-component spin amplitude.
struct SpinState {
    cplx up{1.0, 0.0};
    cplx down{0.0, 0.0};

    double norm2() const { return std::norm(up) + std::norm(down); }
};

/// From a named axis state ("x+", "y-", "z+", ...).
SpinState spin_state(const std::string& label);
/// From Bloch angles: (cos(theta/2), e^{i phi} sin(theta/2)).
SpinState spin_state(double theta, double phi);

enum class IncidentProfile { Monochromatic, Gaussian };

/// Analytic incident plane wave. The dimensionless carrier has |k| = 1, so the
/// monochromatic phase is exp(i(k.r - tau)); a Gaussian pulse disperses while
/// its envelope moves at group velocity 2 along the propagation direction.
struct IncidentSpec {
    Vec3 direction{0.0, 1.0, 0.0};  // unit
    SpinState spin;
    IncidentProfile profile = IncidentProfile::Monochromatic;
    double sigma0 = 0.0;          // Gaussian envelope width (dimensionless length)
    double center_offset = 0.0;   // Gaussian center along direction at tau = 0
    double ramp_periods = 5.0;    // monochromatic turn-on, in carrier periods

    void validate() const;
    double ramp_end() const;  // tau at which the ramp reaches 1
};

/// Raised-cosine turn-on: 0 at tau<=0, 1 beyond ramp_end, C1 at both ends.
/// While the ramp is active the incident wave violates the free equation by
/// |g'(tau)| <= 1/(4*ramp_periods).
double ramp_value(const IncidentSpec& spec, double tau);

struct IncidentValue {
    cplx up, down;
    Vec3 grad_up_re, grad_up_im;  // gradient of each component, split re/im
    Vec3 grad_down_re, grad_down_im;

    std::array<cplx, 3> grad_up() const {
        return {cplx(grad_up_re.x, grad_up_im.x), cplx(grad_up_re.y, grad_up_im.y),
                cplx(grad_up_re.z, grad_up_im.z)};
    }
    std::array<cplx, 3> grad_down() const {
        return {cplx(grad_down_re.x, grad_down_im.x), cplx(grad_down_re.y, grad_down_im.y),
                cplx(grad_down_re.z, grad_down_im.z)};
    }
};

/// Value and analytic gradient of the incident spinor at one space-time point.
/// Both components share a scalar envelope: free propagation preserves spin.
IncidentValue incident_value(const IncidentSpec& spec, const Vec3& r, double tau);

/// Scalar envelope and its directional derivative along the propagation axis;
/// the spinor value is spin * envelope. Exposed for the engine's fast paths.
void incident_envelope(const IncidentSpec& spec, double s_along, double tau, cplx& value,
                       cplx& d_ds);

}  // namespace spinscat
