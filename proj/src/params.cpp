#include "hydsim/params.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <sstream>

namespace hydsim {

namespace {

struct Field {
    const char* name;
    double PlantParameters::* member;
};

constexpr Field kFields[] = {
    {"alpha", &PlantParameters::alpha},
    {"beta", &PlantParameters::beta},
    {"omega0", &PlantParameters::omega0},
    {"xi", &PlantParameters::xi},
    {"Cd", &PlantParameters::Cd},
    {"w", &PlantParameters::w},
    {"rho", &PlantParameters::rho},
    {"E", &PlantParameters::E},
    {"PS", &PlantParameters::PS},
    {"PT", &PlantParameters::PT},
    {"CL", &PlantParameters::CL},
    {"AA", &PlantParameters::AA},
    {"AB", &PlantParameters::AB},
    {"VA0", &PlantParameters::VA0},
    {"VB0", &PlantParameters::VB0},
    {"m", &PlantParameters::m},
    {"Fc", &PlantParameters::Fc},
    {"Fs", &PlantParameters::Fs},
    {"sigma", &PlantParameters::sigma},
    {"chi", &PlantParameters::chi},
    {"delta", &PlantParameters::delta},
    {"h_stroke", &PlantParameters::h_stroke},
    {"tanh_slope", &PlantParameters::tanh_slope},
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

std::vector<std::string> validate(const PlantParameters& p) {
    std::vector<std::string> violations;
    const auto require = [&](bool ok, const char* text) {
        if (!ok) violations.emplace_back(text);
    };
    require(p.alpha > 0, "alpha > 0");
    require(p.beta >= 0, "beta >= 0");
    require(p.omega0 > 0, "omega0 > 0");
    require(p.xi > 0, "xi > 0");
    require(p.Cd > 0, "Cd > 0");
    require(p.w > 0, "w > 0");
    require(p.rho > 0, "rho > 0");
    require(p.E > 0, "E > 0");
    require(p.PS > p.PT, "PS > PT");
    require(p.PT >= 0, "PT >= 0");
    require(p.CL >= 0, "CL >= 0");
    require(p.AA >= p.AB, "AA >= AB");
    require(p.AB > 0, "AB > 0");
    require(p.VA0 > 0, "VA0 > 0");
    require(p.VB0 > 0, "VB0 > 0");
    require(p.m > 0, "m > 0");
    require(p.Fs >= p.Fc, "Fs >= Fc");
    require(p.Fc > 0, "Fc > 0");
    require(p.sigma > 0, "sigma > 0");
    require(p.chi > 0, "chi > 0");
    require(p.delta != 0, "delta != 0");
    require(p.h_stroke > 0, "h_stroke > 0");
    require(p.tanh_slope > 0, "tanh_slope > 0");
    for (const Field& f : kFields) {
        if (!std::isfinite(p.*f.member)) {
            violations.push_back(std::string(f.name) + " finite");
        }
    }
    return violations;
}

DerivedConstants derive(const PlantParameters& p) {
    DerivedConstants d;
    d.K = p.Cd * p.w * std::sqrt(2.0 / p.rho);
    d.Abar = (p.AA + p.AB) / 2.0;
    d.Vt = p.VA0 + p.VB0;
    d.omega_c = 2.0 * d.Abar * std::sqrt(p.E / (d.Vt * p.m));
    d.zeta = p.sigma / (4.0 * d.Abar) * std::sqrt(d.Vt / (p.E * p.m));
    return d;
}

PlantParameters load_config(std::istream& in) {
    PlantParameters p;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected key=value, got \"" + stripped + "\"");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        const Field* field = nullptr;
        for (const Field& f : kFields) {
            if (key == f.name) {
                field = &f;
                break;
            }
        }
        if (field == nullptr) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": unknown parameter \"" + key + "\"");
        }
        try {
            std::size_t consumed = 0;
            const double parsed = std::stod(value, &consumed);
            if (consumed != value.size()) throw std::invalid_argument(value);
            p.*(field->member) = parsed;
        } catch (const std::exception&) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": cannot parse value \"" + value + "\" for " +
                              key);
        }
    }
    return p;
}

PlantParameters load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    return load_config(in);
}

std::uint64_t params_hash(const PlantParameters& p) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a offset basis
    const auto mix = [&h](const char* text) {
        for (const char* c = text; *c != '\0'; ++c) {
            h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(*c));
            h *= 1099511628211ULL;
        }
    };
    char buf[64];
    for (const Field& f : kFields) {
        std::snprintf(buf, sizeof buf, "%s=%.17g;", f.name, p.*f.member);
        mix(buf);
    }
    return h;
}

}  // namespace hydsim
