#include "hydsim/frf_data.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace hydsim {

std::vector<double> FrfData::magnitude_db() const {
    std::vector<double> out(response.size());
    for (std::size_t i = 0; i < response.size(); ++i) {
        out[i] = 20.0 * std::log10(std::abs(response[i]));
    }
    return out;
}

std::vector<double> FrfData::phase_deg() const {
    constexpr double kRadToDeg = 180.0 / std::numbers::pi;
    std::vector<double> out(response.size(), 0.0);
    double offset = 0.0;
    bool have_prev = false;
    double prev = 0.0;
    for (std::size_t i = 0; i < response.size(); ++i) {
        if (!is_valid(i)) continue;
        const double raw = std::arg(response[i]) * kRadToDeg;
        if (have_prev) {
            while (raw + offset - prev > 180.0) offset -= 360.0;
            while (raw + offset - prev < -180.0) offset += 360.0;
        }
        out[i] = raw + offset;
        prev = out[i];
        have_prev = true;
    }
    return out;
}

FrfData FrfData::band(double f_lo, double f_hi) const {
    FrfData out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (freq_hz[i] < f_lo || freq_hz[i] > f_hi) continue;
        out.freq_hz.push_back(freq_hz[i]);
        out.response.push_back(response[i]);
        if (!coherence.empty()) out.coherence.push_back(coherence[i]);
        if (!valid.empty()) out.valid.push_back(valid[i]);
    }
    return out;
}

void FrfData::write_csv(std::ostream& out) const {
    const std::vector<double> mag = magnitude_db();
    const std::vector<double> phase = phase_deg();
    out << "f_hz,mag_db,phase_deg\n";
    char buf[128];
    for (std::size_t i = 0; i < size(); ++i) {
        if (!is_valid(i)) continue;
        std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g\n", freq_hz[i], mag[i],
                      phase[i]);
        out << buf;
    }
}

void FrfData::write_csv_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_csv(out);
}

}  // namespace hydsim
