#pragma once

#include <array>

#include "hydsim/params.hpp"
#include "hydsim/valve.hpp"

namespace hydsim {

/// State of the full-order model. Pressures may transiently leave [PT, PS];
/// they are not clamped.
struct FullState {
    double nu = 0.0;      // spool displacement [m]
    double nu_dot = 0.0;  // spool velocity [m/s]
    double PA = 0.0;      // chamber A pressure [Pa]
    double PB = 0.0;      // chamber B pressure [Pa]
    double x = 0.0;       // rod position [m]
    double x_dot = 0.0;   // rod velocity [m/s]
};

/// State of the reduced model. x is an output integrator only; it does not
/// feed back into the dynamics.
struct ReducedState {
    double PL = 0.0;      // load pressure PA - PB [Pa]
    double x_dot = 0.0;   // rod velocity [m/s]
    double x = 0.0;       // rod position [m]
};

enum class FrictionModel {
    smooth_tanh,         // sign(xdot) replaced by tanh(tanh_slope*xdot)
    discontinuous_sign,  // textbook discontinuous characteristic
};

/// Steady-state Stribeck friction force:
///   f = dir(xdot)*(Fc + (Fs-Fc)*exp(-|xdot|^delta * chi^-delta)) + sigma*xdot
/// where dir is tanh(tanh_slope*xdot) or sign(xdot) per the model choice.
double friction(double x_dot, const PlantParameters& p,
                FrictionModel model = FrictionModel::smooth_tanh);

/// d(friction)/d(x_dot) of the smooth_tanh model. Finite everywhere; the
/// limit tanh_slope*Fs + sigma is used at x_dot = 0.
double friction_derivative(double x_dot, const PlantParameters& p);

struct ChamberVolumes {
    double VA;  // [m^3]
    double VB;  // [m^3]
};

/// VA = VA0 + AA*sat(x), VB = VB0 - AB*sat(x), with x clamped to the
/// half-stroke [-h_stroke, +h_stroke].
ChamberVolumes chamber_volumes(double x, const PlantParameters& p);

/// Right-hand side of the full-order model (six integrators): spool pair,
/// both chamber continuity equations, rod position and velocity.
/// u is the commanded spool position, FL the instantaneous external load
/// force. With bypass_input_nonlinearity the dead-zone is skipped and
/// z = clamp(nu, -alpha, +alpha).
FullState full_derivative(const FullState& s, double u, double FL,
                          const PlantParameters& p,
                          bool bypass_input_nonlinearity = false);

/// Right-hand side of the reduced model. u_star plays the role of the spool
/// position entering the input nonlinearity directly.
ReducedState reduced_derivative(const ReducedState& s, double u_star,
                                double FL, const PlantParameters& p,
                                bool bypass_input_nonlinearity = false);

using Mat6 = std::array<std::array<double, 6>, 6>;
using Mat3 = std::array<std::array<double, 3>, 3>;

/// Analytic Jacobian of full_derivative w.r.t. the state, dead-zone map,
/// state order (nu, nu_dot, PA, PB, x, x_dot). Valid away from the orifice
/// branch boundaries, the stroke limit, and a clamped radicand.
Mat6 full_jacobian(const FullState& s, double u, double FL,
                   const PlantParameters& p);

/// Analytic Jacobian of reduced_derivative, state order (PL, x_dot, x).
Mat3 reduced_jacobian(const ReducedState& s, double u_star, double FL,
                      const PlantParameters& p);

}  // namespace hydsim
