#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace hydsim {

/// Physical parameter set of a DCV-controlled hydraulic cylinder, all SI.
/// Defaults are the reference actuator used throughout the tests and docs.
struct PlantParameters {
    double alpha = 1e-3;        // orifice saturation level [m]
    double beta = 3e-4;         // dead-zone size [m]
    double omega0 = 1200.0;     // valve closed-loop eigenfrequency [rad/s]
    double xi = 0.7;            // valve closed-loop damping ratio [-]
    double Cd = 0.65;           // discharge coefficient [-]
    double w = 0.02;            // orifice area gradient [m]
    double rho = 850.0;         // oil density [kg/m^3]
    double E = 1e8;             // bulk modulus [Pa]
    double PS = 1e7;            // supply pressure [Pa]
    double PT = 0.0;            // tank pressure [Pa]
    double CL = 0.0;            // internal leakage coefficient (README: units)
    double AA = 5e-3;           // piston-side effective area [m^2]
    double AB = 4.7e-3;         // rod-side effective area [m^2]
    double VA0 = 1.2e-3;        // chamber A volume at x = 0 [m^3]
    double VB0 = 1.15e-3;       // chamber B volume at x = 0 [m^3]
    double m = 20.0;            // moving mass [kg]
    double Fc = 600.0;          // Coulomb friction level [N]
    double Fs = 900.0;          // stiction friction level [N]
    double sigma = 2000.0;      // viscous friction coefficient [kg/s]
    double chi = 0.02;          // Stribeck velocity scale [m/s]
    double delta = 0.8;         // Stribeck shape exponent [-]
    double h_stroke = 0.2;      // cylinder half-stroke [m]
    double tanh_slope = 400.0;  // slope of tanh() replacing sign(xdot) [s/m]
};

/// Constants derived from PlantParameters, shared by the flow and linear
/// analysis code.
struct DerivedConstants {
    double K;        // valve gain, flow per opening per sqrt(Pa)
    double Abar;     // average effective piston area [m^2]
    double Vt;       // total actuator volume [m^3]
    double omega_c;  // cylinder eigenfrequency [rad/s]
    double zeta;     // cylinder damping ratio [-]
};

/// Checks every parameter invariant. Returns one entry per violated
/// invariant, e.g. "m > 0"; empty result means the set is valid.
std::vector<std::string> validate(const PlantParameters& p);

/// Derived constants:
///   K       = Cd * w * sqrt(2/rho)
///   Abar    = (AA + AB)/2
///   Vt      = VA0 + VB0
///   omega_c = 2 * Abar * sqrt(E/(Vt*m))
///   zeta    = sigma/(4*Abar) * sqrt(Vt/(E*m))
/// Pre: validate(p) is empty.
DerivedConstants derive(const PlantParameters& p);

/// Thrown by the config readers on syntax errors or unknown keys.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reads a flat key=value config, one parameter per line, keys equal to the
/// PlantParameters field names. '#' starts a comment line; blank lines are
/// ignored. Unspecified keys keep their defaults. Unknown keys throw.
PlantParameters load_config(std::istream& in);
PlantParameters load_config_file(const std::string& path);

/// FNV-1a over the canonical text of all fields; trajectory metadata tag.
std::uint64_t params_hash(const PlantParameters& p);

}  // namespace hydsim
