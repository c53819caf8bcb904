#include "hydsim/valve.hpp"

#include <algorithm>
#include <cmath>

namespace hydsim {

namespace {

double valve_gain(const PlantParameters& p) {
    return p.Cd * p.w * std::sqrt(2.0 / p.rho);
}

// sqrt with the radicand clamped at zero; transient negative pressure
// differences stall the flow instead of leaving the real axis.
double sqrt_clamped(double radicand) {
    return std::sqrt(std::max(0.0, radicand));
}

}  // namespace

SpoolDerivative spool_derivative(const SpoolState& s, double u,
                                 const PlantParameters& p) {
    const double w2 = p.omega0 * p.omega0;
    return {s.nu_dot, w2 * u - 2.0 * p.xi * p.omega0 * s.nu_dot - w2 * s.nu};
}

double orifice_state(double nu, const PlantParameters& p) {
    const double mag = std::abs(nu);
    if (mag < p.beta) return 0.0;
    const double sign = nu >= 0.0 ? 1.0 : -1.0;
    if (mag >= p.alpha + p.beta) return p.alpha * sign;
    return nu - p.beta * sign;
}

double orifice_state_bypass(double nu, const PlantParameters& p) {
    return std::clamp(nu, -p.alpha, p.alpha);
}

PortFlows port_flows(double z, double PA, double PB,
                     const PlantParameters& p) {
    if (z == 0.0) return {0.0, 0.0};
    const double K = valve_gain(p);
    if (z > 0.0) {
        return {z * K * sqrt_clamped(p.PS - PA),
                -z * K * sqrt_clamped(PB - p.PT)};
    }
    return {z * K * sqrt_clamped(PA - p.PT),
            -z * K * sqrt_clamped(p.PS - PB)};
}

double load_flow(double z, double PL, const PlantParameters& p) {
    if (z == 0.0) return 0.0;
    const double sign = z > 0.0 ? 1.0 : -1.0;
    return z * valve_gain(p) * sqrt_clamped((p.PS - sign * PL) / 2.0);
}

ChamberPressures chamber_pressures(double PL, const PlantParameters& p) {
    return {(p.PS + PL) / 2.0, (p.PS - PL) / 2.0};
}

}  // namespace hydsim
