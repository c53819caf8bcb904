#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hydsim/params.hpp"
#include "hydsim/plant.hpp"

namespace hydsim {

/// Excitation applied to the spool command input.
struct InputSignal {
    enum class Kind { constant, step, sine, down_chirp };

    Kind kind = Kind::constant;
    double amplitude = 0.0;  // [m]
    double frequency = 0.0;  // sine frequency [Hz]
    double f_start = 0.0;    // chirp start frequency [Hz]
    double f_end = 0.0;      // chirp end frequency [Hz]
    double step_time = 0.0;  // step switch-on time [s]
    double duration = 0.0;   // chirp sweep length T [s]

    static InputSignal constant(double amp);
    static InputSignal step(double amp, double step_time = 0.0);
    static InputSignal sine(double amp, double freq_hz);
    static InputSignal down_chirp(double amp, double f_start_hz,
                                  double f_end_hz, double duration_s);

    /// Parses "const:A | step:A[:T] | sine:A:F | chirp:A:F0:F1".
    /// Chirps take their sweep length from chirp_duration.
    static InputSignal parse(std::string_view text, double chirp_duration);

    /// Canonical text form, e.g. "sine:0.001:0.1" (trajectory metadata).
    std::string description() const;
};

/// Signal value at time t >= 0. The chirp phase is
///   2*pi*(f_start*t + (f_end - f_start)/(2*T)*t^2)
/// (instantaneous frequency sweeps linearly f_start -> f_end over T) and
/// holds f_end beyond T.
double sample(const InputSignal& sig, double t);

/// Exogenous load force as a function of time; an empty function means
/// identically zero.
using ExternalLoad = std::function<double(double)>;

enum class ModelKind { full, reduced };

enum class Integrator {
    forward_euler,  // fixed step, the reference scheme
    rk4_fixed,      // fixed-step 4th order, for convergence cross-checks only
};

/// Thrown when a state component leaves the finite range during integration.
struct SimulationBlowup : std::runtime_error {
    SimulationBlowup(std::size_t step_index_, std::string component_,
                     std::string what_);
    std::size_t step_index;
    std::string component;
};

struct SimOptions {
    double t_end = 1.0;
    double dt = 1e-4;
    bool bypass_input_nonlinearity = false;
    Integrator integrator = Integrator::forward_euler;
    std::optional<FullState> full_init;        // default: all zeros
    std::optional<ReducedState> reduced_init;  // default: all zeros
};

/// Uniformly sampled state record plus derived signals.
/// Columns (full):    nu, nu_dot, PA, PB, x, x_dot, z, QA, QB
/// Columns (reduced): PL, x_dot, x, z, QL
struct Trajectory {
    double dt = 0.0;
    ModelKind model = ModelKind::reduced;
    std::string input_description;
    std::uint64_t parameter_hash = 0;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> data;  // data[c][k], one vector per column

    std::size_t size() const { return data.empty() ? 0 : data.front().size(); }
    double time(std::size_t k) const { return static_cast<double>(k) * dt; }
    const std::vector<double>& column(std::string_view name) const;

    /// CSV: '#'-prefixed metadata lines, a header row, one row per step,
    /// 9 significant digits.
    void write_csv(std::ostream& out) const;
    void write_csv_file(const std::string& path) const;
    static Trajectory read_csv(std::istream& in);
    static Trajectory read_csv_file(const std::string& path);
};

/// Fixed-step integration from the all-zero state (unless overridden in
/// opt). Record count is floor(t_end/dt) + 1 including t = 0. Throws
/// SimulationBlowup when a component turns non-finite.
Trajectory integrate(ModelKind model, const PlantParameters& p,
                     const InputSignal& sig, const ExternalLoad& load,
                     const SimOptions& opt);

/// Zero external load.
Trajectory integrate(ModelKind model, const PlantParameters& p,
                     const InputSignal& sig, const SimOptions& opt);

}  // namespace hydsim
