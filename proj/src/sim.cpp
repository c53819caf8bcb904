#include "hydsim/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace hydsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string format_g(double v, const char* fmt) {
    char buf[40];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t begin = 0;
    while (true) {
        const auto pos = line.find(sep, begin);
        if (pos == std::string::npos) {
            out.push_back(line.substr(begin));
            return out;
        }
        out.push_back(line.substr(begin, pos - begin));
        begin = pos + 1;
    }
}

double parse_double(const std::string& text, const char* what) {
    try {
        std::size_t consumed = 0;
        const double v = std::stod(text, &consumed);
        if (consumed != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("cannot parse ") + what +
                                    " \"" + text + "\"");
    }
}

}  // namespace

InputSignal InputSignal::constant(double amp) {
    InputSignal s;
    s.kind = Kind::constant;
    s.amplitude = amp;
    return s;
}

InputSignal InputSignal::step(double amp, double step_time) {
    InputSignal s;
    s.kind = Kind::step;
    s.amplitude = amp;
    s.step_time = step_time;
    return s;
}

InputSignal InputSignal::sine(double amp, double freq_hz) {
    if (!(freq_hz > 0.0)) {
        throw std::invalid_argument("sine frequency must be > 0");
    }
    InputSignal s;
    s.kind = Kind::sine;
    s.amplitude = amp;
    s.frequency = freq_hz;
    return s;
}

InputSignal InputSignal::down_chirp(double amp, double f_start_hz,
                                    double f_end_hz, double duration_s) {
    if (!(f_start_hz > f_end_hz && f_end_hz > 0.0)) {
        throw std::invalid_argument(
            "down-chirp requires f_start > f_end > 0");
    }
    if (!(duration_s > 0.0)) {
        throw std::invalid_argument("chirp duration must be > 0");
    }
    InputSignal s;
    s.kind = Kind::down_chirp;
    s.amplitude = amp;
    s.f_start = f_start_hz;
    s.f_end = f_end_hz;
    s.duration = duration_s;
    return s;
}

InputSignal InputSignal::parse(std::string_view text, double chirp_duration) {
    const std::vector<std::string> parts = split(std::string(text), ':');
    const std::string& kind = parts.front();
    if (kind == "const" && parts.size() == 2) {
        return constant(parse_double(parts[1], "amplitude"));
    }
    if (kind == "step" && (parts.size() == 2 || parts.size() == 3)) {
        const double t0 =
            parts.size() == 3 ? parse_double(parts[2], "step time") : 0.0;
        return step(parse_double(parts[1], "amplitude"), t0);
    }
    if (kind == "sine" && parts.size() == 3) {
        return sine(parse_double(parts[1], "amplitude"),
                    parse_double(parts[2], "frequency"));
    }
    if (kind == "chirp" && parts.size() == 4) {
        return down_chirp(parse_double(parts[1], "amplitude"),
                          parse_double(parts[2], "start frequency"),
                          parse_double(parts[3], "end frequency"),
                          chirp_duration);
    }
    throw std::invalid_argument(
        "bad input spec \"" + std::string(text) +
        "\"; expected const:A | step:A[:T] | sine:A:F | chirp:A:F0:F1");
}

std::string InputSignal::description() const {
    switch (kind) {
        case Kind::constant:
            return "const:" + format_g(amplitude, "%.9g");
        case Kind::step:
            return "step:" + format_g(amplitude, "%.9g") + ":" +
                   format_g(step_time, "%.9g");
        case Kind::sine:
            return "sine:" + format_g(amplitude, "%.9g") + ":" +
                   format_g(frequency, "%.9g");
        case Kind::down_chirp:
            return "chirp:" + format_g(amplitude, "%.9g") + ":" +
                   format_g(f_start, "%.9g") + ":" + format_g(f_end, "%.9g");
    }
    return {};
}

double sample(const InputSignal& sig, double t) {
    switch (sig.kind) {
        case InputSignal::Kind::constant:
            return sig.amplitude;
        case InputSignal::Kind::step:
            return t < sig.step_time ? 0.0 : sig.amplitude;
        case InputSignal::Kind::sine:
            return sig.amplitude * std::sin(kTwoPi * sig.frequency * t);
        case InputSignal::Kind::down_chirp: {
            const double T = sig.duration;
            if (t <= T) {
                const double phase =
                    kTwoPi * (sig.f_start * t +
                              (sig.f_end - sig.f_start) / (2.0 * T) * t * t);
                return sig.amplitude * std::sin(phase);
            }
            const double phase_T = kTwoPi * T * (sig.f_start + sig.f_end) / 2.0;
            return sig.amplitude *
                   std::sin(phase_T + kTwoPi * sig.f_end * (t - T));
        }
    }
    return 0.0;
}

SimulationBlowup::SimulationBlowup(std::size_t step_index_,
                                   std::string component_, std::string what_)
    : std::runtime_error(std::move(what_)),
      step_index(step_index_),
      component(std::move(component_)) {}

const std::vector<double>& Trajectory::column(std::string_view name) const {
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c] == name) return data[c];
    }
    throw std::out_of_range("trajectory has no column \"" + std::string(name) +
                            "\"");
}

void Trajectory::write_csv(std::ostream& out) const {
    out << "# model: " << (model == ModelKind::full ? "full" : "reduced")
        << "\n";
    if (!input_description.empty()) {
        out << "# input: " << input_description << "\n";
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(parameter_hash));
    out << "# params_hash: " << buf << "\n";
    out << "t";
    for (const std::string& c : columns) out << ',' << c;
    out << "\n";
    const std::size_t n = size();
    std::string line;
    for (std::size_t k = 0; k < n; ++k) {
        line = format_g(time(k), "%.9g");
        for (const auto& col : data) {
            line += ',';
            line += format_g(col[k], "%.9g");
        }
        line += '\n';
        out << line;
    }
}

void Trajectory::write_csv_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_csv(out);
}

Trajectory Trajectory::read_csv(std::istream& in) {
    Trajectory traj;
    std::string line;
    bool have_header = false;
    bool model_from_meta = false;
    std::vector<double> times;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            const auto meta = [&line](const char* key) -> std::string {
                const std::string prefix = std::string("# ") + key + ": ";
                if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
                return {};
            };
            if (const std::string v = meta("model"); !v.empty()) {
                traj.model = v == "full" ? ModelKind::full : ModelKind::reduced;
                model_from_meta = true;
            } else if (const std::string v2 = meta("input"); !v2.empty()) {
                traj.input_description = v2;
            } else if (const std::string v3 = meta("params_hash"); !v3.empty()) {
                traj.parameter_hash = std::stoull(v3, nullptr, 16);
            }
            continue;
        }
        const std::vector<std::string> fields = split(line, ',');
        if (!have_header) {
            if (fields.empty() || fields.front() != "t") {
                throw std::runtime_error(
                    "trajectory CSV: header must start with column t");
            }
            traj.columns.assign(fields.begin() + 1, fields.end());
            traj.data.assign(traj.columns.size(), {});
            have_header = true;
            continue;
        }
        if (fields.size() != traj.columns.size() + 1) {
            throw std::runtime_error("trajectory CSV: row with " +
                                     std::to_string(fields.size()) +
                                     " fields, expected " +
                                     std::to_string(traj.columns.size() + 1));
        }
        times.push_back(parse_double(fields[0], "time"));
        for (std::size_t c = 0; c < traj.columns.size(); ++c) {
            traj.data[c].push_back(parse_double(fields[c + 1], "value"));
        }
    }
    if (!have_header) throw std::runtime_error("trajectory CSV: no header row");
    traj.dt = times.size() >= 2 ? times[1] - times[0] : 0.0;
    if (!model_from_meta) {
        const bool has_pa =
            std::find(traj.columns.begin(), traj.columns.end(), "PA") !=
            traj.columns.end();
        traj.model = has_pa ? ModelKind::full : ModelKind::reduced;
    }
    return traj;
}

Trajectory Trajectory::read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_csv(in);
}

namespace {

template <typename State>
void check_finite(const State& s, const char* const* names,
                  const double* values, std::size_t count, std::size_t step) {
    (void)s;
    for (std::size_t i = 0; i < count; ++i) {
        if (!std::isfinite(values[i])) {
            throw SimulationBlowup(
                step, names[i],
                "integration diverged at step " + std::to_string(step) +
                    ": component " + names[i] + " is non-finite");
        }
    }
}

Trajectory integrate_full(const PlantParameters& p, const InputSignal& sig,
                          const ExternalLoad& load, const SimOptions& opt) {
    Trajectory traj;
    traj.dt = opt.dt;
    traj.model = ModelKind::full;
    traj.input_description = sig.description();
    traj.parameter_hash = params_hash(p);
    traj.columns = {"nu", "nu_dot", "PA", "PB", "x",
                    "x_dot", "z", "QA", "QB"};

    const std::size_t n_steps =
        static_cast<std::size_t>(std::floor(opt.t_end / opt.dt + 1e-9));
    traj.data.assign(traj.columns.size(), {});
    for (auto& col : traj.data) col.reserve(n_steps + 1);

    FullState s = opt.full_init.value_or(FullState{});
    static constexpr const char* kNames[6] = {"nu", "nu_dot", "PA",
                                              "PB", "x", "x_dot"};
    for (std::size_t k = 0; k <= n_steps; ++k) {
        const double t = static_cast<double>(k) * opt.dt;
        const double z = opt.bypass_input_nonlinearity
                             ? orifice_state_bypass(s.nu, p)
                             : orifice_state(s.nu, p);
        const PortFlows q = port_flows(z, s.PA, s.PB, p);
        const double row[9] = {s.nu, s.nu_dot, s.PA, s.PB, s.x,
                               s.x_dot, z, q.QA, q.QB};
        for (std::size_t c = 0; c < 9; ++c) traj.data[c].push_back(row[c]);
        if (k == n_steps) break;

        const auto rhs = [&](const FullState& state, double time) {
            const double u = sample(sig, time);
            const double FL = load ? load(time) : 0.0;
            return full_derivative(state, u, FL, p,
                                   opt.bypass_input_nonlinearity);
        };
        const auto axpy = [](const FullState& a, double h,
                             const FullState& b) {
            return FullState{a.nu + h * b.nu, a.nu_dot + h * b.nu_dot,
                             a.PA + h * b.PA, a.PB + h * b.PB,
                             a.x + h * b.x, a.x_dot + h * b.x_dot};
        };
        if (opt.integrator == Integrator::forward_euler) {
            s = axpy(s, opt.dt, rhs(s, t));
        } else {
            const FullState k1 = rhs(s, t);
            const FullState k2 = rhs(axpy(s, opt.dt / 2.0, k1), t + opt.dt / 2.0);
            const FullState k3 = rhs(axpy(s, opt.dt / 2.0, k2), t + opt.dt / 2.0);
            const FullState k4 = rhs(axpy(s, opt.dt, k3), t + opt.dt);
            FullState incr = axpy(k1, 2.0, k2);
            incr = axpy(incr, 2.0, k3);
            incr = axpy(incr, 1.0, k4);
            s = axpy(s, opt.dt / 6.0, incr);
        }
        const double vals[6] = {s.nu, s.nu_dot, s.PA, s.PB, s.x, s.x_dot};
        check_finite(s, kNames, vals, 6, k + 1);
    }
    return traj;
}

Trajectory integrate_reduced(const PlantParameters& p, const InputSignal& sig,
                             const ExternalLoad& load, const SimOptions& opt) {
    Trajectory traj;
    traj.dt = opt.dt;
    traj.model = ModelKind::reduced;
    traj.input_description = sig.description();
    traj.parameter_hash = params_hash(p);
    traj.columns = {"PL", "x_dot", "x", "z", "QL"};

    const std::size_t n_steps =
        static_cast<std::size_t>(std::floor(opt.t_end / opt.dt + 1e-9));
    traj.data.assign(traj.columns.size(), {});
    for (auto& col : traj.data) col.reserve(n_steps + 1);

    ReducedState s = opt.reduced_init.value_or(ReducedState{});
    static constexpr const char* kNames[3] = {"PL", "x_dot", "x"};
    for (std::size_t k = 0; k <= n_steps; ++k) {
        const double t = static_cast<double>(k) * opt.dt;
        const double u_star = sample(sig, t);
        const double z = opt.bypass_input_nonlinearity
                             ? orifice_state_bypass(u_star, p)
                             : orifice_state(u_star, p);
        const double QL = load_flow(z, s.PL, p);
        const double row[5] = {s.PL, s.x_dot, s.x, z, QL};
        for (std::size_t c = 0; c < 5; ++c) traj.data[c].push_back(row[c]);
        if (k == n_steps) break;

        const auto rhs = [&](const ReducedState& state, double time) {
            const double u = sample(sig, time);
            const double FL = load ? load(time) : 0.0;
            return reduced_derivative(state, u, FL, p,
                                      opt.bypass_input_nonlinearity);
        };
        const auto axpy = [](const ReducedState& a, double h,
                             const ReducedState& b) {
            return ReducedState{a.PL + h * b.PL, a.x_dot + h * b.x_dot,
                                a.x + h * b.x};
        };
        if (opt.integrator == Integrator::forward_euler) {
            s = axpy(s, opt.dt, rhs(s, t));
        } else {
            const ReducedState k1 = rhs(s, t);
            const ReducedState k2 =
                rhs(axpy(s, opt.dt / 2.0, k1), t + opt.dt / 2.0);
            const ReducedState k3 =
                rhs(axpy(s, opt.dt / 2.0, k2), t + opt.dt / 2.0);
            const ReducedState k4 = rhs(axpy(s, opt.dt, k3), t + opt.dt);
            ReducedState incr = axpy(k1, 2.0, k2);
            incr = axpy(incr, 2.0, k3);
            incr = axpy(incr, 1.0, k4);
            s = axpy(s, opt.dt / 6.0, incr);
        }
        const double vals[3] = {s.PL, s.x_dot, s.x};
        check_finite(s, kNames, vals, 3, k + 1);
    }
    return traj;
}

}  // namespace

Trajectory integrate(ModelKind model, const PlantParameters& p,
                     const InputSignal& sig, const ExternalLoad& load,
                     const SimOptions& opt) {
    if (!(opt.dt > 0.0)) throw std::invalid_argument("dt must be > 0");
    if (!(opt.t_end >= opt.dt)) {
        throw std::invalid_argument("t_end must be >= dt");
    }
    return model == ModelKind::full ? integrate_full(p, sig, load, opt)
                                    : integrate_reduced(p, sig, load, opt);
}

Trajectory integrate(ModelKind model, const PlantParameters& p,
                     const InputSignal& sig, const SimOptions& opt) {
    return integrate(model, p, sig, ExternalLoad{}, opt);
}

}  // namespace hydsim
