#include "spinscat/incidence.hpp"

#include <cmath>
#include <numbers>

#include "spinscat/errors.hpp"

namespace spinscat {

namespace {
constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};
}  // namespace

SpinState spin_state(const std::string& label) {
    const double s = 1.0 / std::sqrt(2.0);
    if (label == "z+") return {cplx(1, 0), cplx(0, 0)};
    if (label == "z-") return {cplx(0, 0), cplx(1, 0)};
    if (label == "x+") return {cplx(s, 0), cplx(s, 0)};
    if (label == "x-") return {cplx(s, 0), cplx(-s, 0)};
    if (label == "y+") return {cplx(s, 0), cplx(0, s)};
    if (label == "y-") return {cplx(s, 0), cplx(0, -s)};
    throw std::domain_error("spin_state: unknown label '" + label +
                            "' (expected one of x+, x-, y+, y-, z+, z-)");
}

SpinState spin_state(double theta, double phi) {
    SpinState st;
    st.up = cplx(std::cos(theta / 2.0), 0.0);
    st.down = std::exp(kI * phi) * std::sin(theta / 2.0);
    return st;
}

void IncidentSpec::validate() const {
    if (std::abs(norm(direction) - 1.0) > 1e-12)
        throw ConfigError("incidence: direction must be a unit vector");
    if (std::abs(spin.norm2() - 1.0) > 1e-12)
        throw ConfigError("incidence: spin state must be normalized");
    if (profile == IncidentProfile::Gaussian && !(sigma0 > 0.0))
        throw ConfigError("incidence: Gaussian profile needs sigma0 > 0");
    if (ramp_periods < 0.0) throw ConfigError("incidence: ramp_periods must be >= 0");
}

double IncidentSpec::ramp_end() const {
    return profile == IncidentProfile::Monochromatic ? ramp_periods * 2.0 * kPi : 0.0;
}

double ramp_value(const IncidentSpec& spec, double tau) {
    if (spec.profile != IncidentProfile::Monochromatic) return 1.0;
    const double T = spec.ramp_end();
    if (tau <= 0.0) return 0.0;
    if (tau >= T) return 1.0;
    return 0.5 * (1.0 - std::cos(kPi * tau / T));
}

void incident_envelope(const IncidentSpec& spec, double s, double tau, cplx& value, cplx& d_ds) {
    if (spec.profile == IncidentProfile::Monochromatic) {
        const double g = ramp_value(spec, tau);
        value = g * std::exp(kI * (s - tau));
        d_ds = kI * value;
        return;
    }
    // Dispersive Gaussian packet: carrier k=1, group velocity 2, width growing
    // as sqrt(sigma0^4 + tau^2)/sigma0.
    const double s0 = spec.center_offset;
    const cplx denom(spec.sigma0 * spec.sigma0, tau);  // sigma0^2 + i tau
    const cplx amp = 1.0 / std::sqrt(1.0 + kI * tau / (spec.sigma0 * spec.sigma0));
    const double arg = s - s0 - 2.0 * tau;
    value = amp * std::exp(kI * (s - tau) - arg * arg / (4.0 * denom));
    d_ds = value * (kI - arg / (2.0 * denom));
}

IncidentValue incident_value(const IncidentSpec& spec, const Vec3& r, double tau) {
    const double s = dot(spec.direction, r);
    cplx env, denv;
    incident_envelope(spec, s, tau, env, denv);

    IncidentValue out;
    out.up = spec.spin.up * env;
    out.down = spec.spin.down * env;
    const cplx du = spec.spin.up * denv;
    const cplx dd = spec.spin.down * denv;
    out.grad_up_re = spec.direction * du.real();
    out.grad_up_im = spec.direction * du.imag();
    out.grad_down_re = spec.direction * dd.real();
    out.grad_down_im = spec.direction * dd.imag();
    return out;
}

}  // namespace spinscat
