#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hydsim {

/// Frequency response samples on a strictly increasing frequency grid.
/// coherence is empty for analytic responses; valid is empty when every bin
/// is usable (estimation flags bins whose input power is below the floor).
struct FrfData {
    std::vector<double> freq_hz;
    std::vector<std::complex<double>> response;
    std::vector<double> coherence;
    std::vector<std::uint8_t> valid;

    std::size_t size() const { return freq_hz.size(); }
    bool is_valid(std::size_t i) const { return valid.empty() || valid[i]; }

    std::vector<double> magnitude_db() const;
    /// Phase in degrees, unwrapped across consecutive valid bins.
    std::vector<double> phase_deg() const;

    /// Keeps only bins with f in [f_lo, f_hi].
    FrfData band(double f_lo, double f_hi) const;

    /// CSV with columns f_hz, mag_db, phase_deg (9 significant digits);
    /// invalid bins are skipped.
    void write_csv(std::ostream& out) const;
    void write_csv_file(const std::string& path) const;
};

}  // namespace hydsim
