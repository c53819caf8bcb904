#include "hydsim/plant.hpp"

#include <algorithm>
#include <cmath>

namespace hydsim {

namespace {

double valve_gain(const PlantParameters& p) {
    return p.Cd * p.w * std::sqrt(2.0 / p.rho);
}

// Magnitude of the velocity-weakening Stribeck term.
double stribeck_level(double x_dot, const PlantParameters& p) {
    const double arg = std::pow(std::abs(x_dot) / p.chi, p.delta);
    return p.Fc + (p.Fs - p.Fc) * std::exp(-arg);
}

// Slope of orifice_state: 1 on the pass-through branch, 0 in the dead-zone
// and in saturation.
double orifice_state_slope(double nu, const PlantParameters& p) {
    const double mag = std::abs(nu);
    return (mag >= p.beta && mag < p.alpha + p.beta) ? 1.0 : 0.0;
}

struct PortFlowPartials {
    double dQA_dz = 0.0;
    double dQA_dPA = 0.0;
    double dQB_dz = 0.0;
    double dQB_dPB = 0.0;
};

// Partials of the orifice equations; a clamped radicand contributes zero
// slope (the flow is flat there).
PortFlowPartials port_flow_partials(double z, double PA, double PB,
                                    const PlantParameters& p) {
    PortFlowPartials d;
    if (z == 0.0) return d;
    const double K = valve_gain(p);
    if (z > 0.0) {
        if (p.PS - PA > 0.0) {
            const double r = std::sqrt(p.PS - PA);
            d.dQA_dz = K * r;
            d.dQA_dPA = -z * K / (2.0 * r);
        }
        if (PB - p.PT > 0.0) {
            const double r = std::sqrt(PB - p.PT);
            d.dQB_dz = -K * r;
            d.dQB_dPB = -z * K / (2.0 * r);
        }
    } else {
        if (PA - p.PT > 0.0) {
            const double r = std::sqrt(PA - p.PT);
            d.dQA_dz = K * r;
            d.dQA_dPA = z * K / (2.0 * r);
        }
        if (p.PS - PB > 0.0) {
            const double r = std::sqrt(p.PS - PB);
            d.dQB_dz = -K * r;
            d.dQB_dPB = z * K / (2.0 * r);
        }
    }
    return d;
}

}  // namespace

double friction(double x_dot, const PlantParameters& p, FrictionModel model) {
    const double level = stribeck_level(x_dot, p);
    const double dir = model == FrictionModel::smooth_tanh
                           ? std::tanh(p.tanh_slope * x_dot)
                           : (x_dot > 0.0 ? 1.0 : (x_dot < 0.0 ? -1.0 : 0.0));
    return dir * level + p.sigma * x_dot;
}

double friction_derivative(double x_dot, const PlantParameters& p) {
    if (x_dot == 0.0) return p.tanh_slope * p.Fs + p.sigma;
    const double t = std::tanh(p.tanh_slope * x_dot);
    const double level = stribeck_level(x_dot, p);
    const double mag = std::abs(x_dot);
    const double sign = x_dot > 0.0 ? 1.0 : -1.0;
    const double dlevel = (p.Fs - p.Fc) *
                          std::exp(-std::pow(mag / p.chi, p.delta)) *
                          (-p.delta * std::pow(mag, p.delta - 1.0) *
                           std::pow(p.chi, -p.delta) * sign);
    return p.tanh_slope * (1.0 - t * t) * level + t * dlevel + p.sigma;
}

ChamberVolumes chamber_volumes(double x, const PlantParameters& p) {
    const double xs = std::clamp(x, -p.h_stroke, p.h_stroke);
    return {p.VA0 + p.AA * xs, p.VB0 - p.AB * xs};
}

FullState full_derivative(const FullState& s, double u, double FL,
                          const PlantParameters& p,
                          bool bypass_input_nonlinearity) {
    const double z = bypass_input_nonlinearity ? orifice_state_bypass(s.nu, p)
                                               : orifice_state(s.nu, p);
    const PortFlows q = port_flows(z, s.PA, s.PB, p);
    const ChamberVolumes v = chamber_volumes(s.x, p);
    const SpoolDerivative spool = spool_derivative({s.nu, s.nu_dot}, u, p);

    FullState d;
    d.nu = spool.nu_dot;
    d.nu_dot = spool.nu_ddot;
    d.PA = p.E / v.VA * (q.QA - p.AA * s.x_dot - p.CL * (s.PA - s.PB));
    d.PB = p.E / v.VB * (q.QB + p.AB * s.x_dot - p.CL * (s.PB - s.PA));
    d.x = s.x_dot;
    d.x_dot = (s.PA * p.AA - s.PB * p.AB - friction(s.x_dot, p) - FL) / p.m;
    return d;
}

ReducedState reduced_derivative(const ReducedState& s, double u_star,
                                double FL, const PlantParameters& p,
                                bool bypass_input_nonlinearity) {
    const double z = bypass_input_nonlinearity
                         ? orifice_state_bypass(u_star, p)
                         : orifice_state(u_star, p);
    const double QL = load_flow(z, s.PL, p);
    const double Vt = p.VA0 + p.VB0;
    const double Abar = (p.AA + p.AB) / 2.0;

    ReducedState d;
    d.PL = 4.0 * p.E / Vt * (QL - Abar * s.x_dot - p.CL * s.PL);
    d.x_dot = (s.PL * Abar - friction(s.x_dot, p) - FL) / p.m;
    d.x = s.x_dot;
    return d;
}

Mat6 full_jacobian(const FullState& s, double u, double /*FL*/,
                   const PlantParameters& p) {
    const double z = orifice_state(s.nu, p);
    const double zs = orifice_state_slope(s.nu, p);
    const PortFlows q = port_flows(z, s.PA, s.PB, p);
    const PortFlowPartials dq = port_flow_partials(z, s.PA, s.PB, p);
    const ChamberVolumes v = chamber_volumes(s.x, p);
    const bool in_stroke = std::abs(s.x) < p.h_stroke;
    const double dVA_dx = in_stroke ? p.AA : 0.0;
    const double dVB_dx = in_stroke ? -p.AB : 0.0;
    const double balA = q.QA - p.AA * s.x_dot - p.CL * (s.PA - s.PB);
    const double balB = q.QB + p.AB * s.x_dot - p.CL * (s.PB - s.PA);
    (void)u;

    Mat6 J{};
    // d(nu)/dt = nu_dot
    J[0][1] = 1.0;
    // d(nu_dot)/dt
    J[1][0] = -p.omega0 * p.omega0;
    J[1][1] = -2.0 * p.xi * p.omega0;
    // d(PA)/dt
    J[2][0] = p.E / v.VA * dq.dQA_dz * zs;
    J[2][2] = p.E / v.VA * (dq.dQA_dPA - p.CL);
    J[2][3] = p.E / v.VA * p.CL;
    J[2][4] = -p.E / (v.VA * v.VA) * dVA_dx * balA;
    J[2][5] = -p.E / v.VA * p.AA;
    // d(PB)/dt
    J[3][0] = p.E / v.VB * dq.dQB_dz * zs;
    J[3][2] = p.E / v.VB * p.CL;
    J[3][3] = p.E / v.VB * (dq.dQB_dPB - p.CL);
    J[3][4] = -p.E / (v.VB * v.VB) * dVB_dx * balB;
    J[3][5] = p.E / v.VB * p.AB;
    // d(x)/dt = x_dot
    J[4][5] = 1.0;
    // d(x_dot)/dt
    J[5][2] = p.AA / p.m;
    J[5][3] = -p.AB / p.m;
    J[5][5] = -friction_derivative(s.x_dot, p) / p.m;
    return J;
}

Mat3 reduced_jacobian(const ReducedState& s, double u_star, double /*FL*/,
                      const PlantParameters& p) {
    const double z = orifice_state(u_star, p);
    const double Vt = p.VA0 + p.VB0;
    const double Abar = (p.AA + p.AB) / 2.0;

    double dQL_dPL = 0.0;
    if (z != 0.0) {
        const double sign = z > 0.0 ? 1.0 : -1.0;
        const double radicand = (p.PS - sign * s.PL) / 2.0;
        if (radicand > 0.0) {
            dQL_dPL = -std::abs(z) * valve_gain(p) /
                      (4.0 * std::sqrt(radicand));
        }
    }

    Mat3 J{};
    J[0][0] = 4.0 * p.E / Vt * (dQL_dPL - p.CL);
    J[0][1] = -4.0 * p.E / Vt * Abar;
    J[1][0] = Abar / p.m;
    J[1][1] = -friction_derivative(s.x_dot, p) / p.m;
    J[2][1] = 1.0;
    return J;
}

}  // namespace hydsim
