#pragma once

#include <cstddef>
#include <span>

#include "hydsim/frf_data.hpp"

namespace hydsim {

enum class SpectralWindow { hann, rectangular };

struct H1Options {
    std::size_t segment_length = std::size_t{1} << 14;
    double overlap_fraction = 0.5;
    SpectralWindow window = SpectralWindow::hann;
};

/// H1 correlation estimate H(f) = Suy(f)/Suu(f) with cross/auto spectra
/// averaged over windowed overlapping segments; coherence
/// |Suy|^2/(Suu*Syy) is filled in as well. Bins whose input auto-spectrum
/// falls below a numeric floor are flagged invalid instead of returned as
/// garbage. Requires u.size() == y.size() >= 2*segment_length.
FrfData h1_estimate(std::span<const double> u, std::span<const double> y,
                    double dt, const H1Options& opt = {});

/// Moving average of the complex response over +/-half_width_bins around
/// each bin (constant width in log frequency on the log-spaced grids used
/// here); half_width 0 is the identity. Invalid bins are excluded from the
/// averages; coherence, when present, is averaged the same way.
FrfData smooth(const FrfData& frf, std::size_t half_width_bins);

}  // namespace hydsim
