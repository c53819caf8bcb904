#pragma once

#include "hydsim/params.hpp"

namespace hydsim {

/// Spool displacement and velocity of the low-level controlled DCV.
/// The spool itself is unbounded; saturation acts on the orifice state only.
struct SpoolState {
    double nu = 0.0;      // spool displacement [m]
    double nu_dot = 0.0;  // spool velocity [m/s]
};

struct SpoolDerivative {
    double nu_dot;   // d(nu)/dt [m/s]
    double nu_ddot;  // d(nu_dot)/dt [m/s^2]
};

/// Second-order closed-loop spool response to the commanded position u:
///   nu_ddot = omega0^2*u - 2*xi*omega0*nu_dot - omega0^2*nu
/// Unity DC gain: nu settles on u.
SpoolDerivative spool_derivative(const SpoolState& s, double u,
                                 const PlantParameters& p);

/// Dead-zone plus saturation mapping spool displacement to orifice state:
///   alpha*sign(nu)        if |nu| >= alpha + beta
///   0                     if |nu| <  beta
///   nu - beta*sign(nu)    otherwise
/// Odd, continuous, |result| <= alpha.
double orifice_state(double nu, const PlantParameters& p);

/// Saturation-only variant used when the dead-zone is bypassed:
/// clamp(nu, -alpha, +alpha).
double orifice_state_bypass(double nu, const PlantParameters& p);

struct PortFlows {
    double QA;  // flow into chamber A [m^3/s]
    double QB;  // flow into chamber B [m^3/s]
};

/// Orifice flows of both valve ports for orifice state z:
///   QA =  z*K*sqrt(PS - PA)   (z > 0),   z*K*sqrt(PA - PT)   (z < 0)
///   QB = -z*K*sqrt(PB - PT)   (z > 0),  -z*K*sqrt(PS - PB)   (z < 0)
/// z = 0 gives (0, 0). Negative radicands are clamped to zero so transient
/// pressure overshoots stall the flow instead of producing NaNs.
PortFlows port_flows(double z, double PA, double PB, const PlantParameters& p);

/// Aggregated load flow of the reduced model:
///   QL = z*K*sqrt(max(0, (PS - sign(z)*PL)/2)),  QL(0, .) = 0.
double load_flow(double z, double PL, const PlantParameters& p);

struct ChamberPressures {
    double PA;
    double PB;
};

/// Chamber pressures reconstructed from the load pressure:
/// PA = (PS+PL)/2, PB = (PS-PL)/2.
ChamberPressures chamber_pressures(double PL, const PlantParameters& p);

}  // namespace hydsim
