#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "hydsim/frf_data.hpp"
#include "hydsim/params.hpp"

namespace hydsim {

/// Proper rational function in s; coefficients in ascending powers.
struct TransferFunction {
    std::vector<double> num;
    std::vector<double> den;

    std::complex<double> eval(std::complex<double> s) const;
};

/// Linearized flow-to-velocity dynamics:
///   G(s) = (1/Abar) / (s^2/omega_c^2 + 2*zeta*s/omega_c + 1)
TransferFunction reduced_tf(const PlantParameters& p);

/// Operating point of the load-flow linearization; positive quadrant,
/// 0 <= z_hat <= alpha, 0 <= PL_hat < PS.
struct OperatingPoint {
    double z_hat;   // [m]
    double PL_hat;  // [Pa]
};

/// Two published forms of the flow coefficients exist; `paper_literal`
/// reproduces the reference tables, `consistent` carries the extra 1/sqrt(2)
/// of the exact partial derivatives of the load-flow equation.
enum class LinearizationMode { paper_literal, consistent };

struct FlowCoefficients {
    double Cq;   // flow gain, dQL/dz           [m^2/s]
    double Cqp;  // flow-pressure coefficient, -dQL/dPL >= 0
};

/// paper_literal: Cq = K*sqrt(PS - PL_hat), Cqp = K*z_hat/(2*sqrt(PS-PL_hat));
/// consistent: both times 1/sqrt(2). Throws std::domain_error for
/// PL_hat >= PS.
FlowCoefficients flow_coefficients(const OperatingPoint& op,
                                   const PlantParameters& p,
                                   LinearizationMode mode =
                                       LinearizationMode::paper_literal);

/// Linearized load flow QL_hat = Cq*z - Cqp*PL.
double linearized_load_flow(const FlowCoefficients& c, double z, double PL);

/// Closed linearized transfer function from orifice state to rod velocity,
///   Ghat(s) = Cq*G(s) / (1 + Cqp*(m*s + sigma)*G(s)/Abar),
/// reduced to a single degree-2 rational function.
TransferFunction closed_linear_tf(const OperatingPoint& op,
                                  const PlantParameters& p,
                                  LinearizationMode mode =
                                      LinearizationMode::paper_literal);

/// Evaluates tf at s = j*2*pi*f for every f in freqs_hz (all > 0).
FrfData frf_eval(const TransferFunction& tf, const std::vector<double>& freqs_hz);

/// n logarithmically spaced frequencies over [f_min, f_max].
std::vector<double> log_frequency_grid(double f_min, double f_max, std::size_t n);

/// Static load flow over a (z, PL) grid; QL[i][j] = QL(z_values[i], PL[j]).
struct FlowPressureTable {
    std::vector<double> z_values;
    std::vector<double> PL;
    std::vector<std::vector<double>> QL;

    /// CSV: column PL then one QL column per z value.
    void write_csv(std::ostream& out) const;
    void write_csv_file(const std::string& path) const;
};

FlowPressureTable flow_pressure_curves(const std::vector<double>& z_values,
                                       const std::vector<double>& PL_grid,
                                       const PlantParameters& p);

using PoleTriple = std::array<std::complex<double>, 3>;

/// Closed-loop poles of 1 + k*G(s)/s = 0, i.e. the roots of
///   s^3/omega_c^2 + 2*zeta*s^2/omega_c + s + k/Abar = 0.
PoleTriple closed_loop_poles(const PlantParameters& p, double k);

/// Pole sweep over a gain grid; rows are continuity-matched so each of the
/// three loci varies smoothly with k.
struct RootLocusResult {
    std::vector<double> gains;
    std::vector<PoleTriple> poles;

    /// CSV: k, re1, im1, re2, im2, re3, im3.
    void write_csv(std::ostream& out) const;
    void write_csv_file(const std::string& path) const;
};

RootLocusResult root_locus(const PlantParameters& p,
                           const std::vector<double>& gain_grid);

/// Default sweep: n log-spaced gains over [1e-3*k_crit, 10*k_crit].
std::vector<double> default_gain_grid(const PlantParameters& p,
                                      std::size_t n = 200);

/// Stability boundary of the position loop, k_crit = sigma*Abar/m
/// (equivalently 2*zeta*omega_c*Abar).
double critical_gain(const PlantParameters& p);

}  // namespace hydsim
