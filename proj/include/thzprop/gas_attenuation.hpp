// SPDX-License-Identifier: Apache-2.0
//
// thzprop: propagation and spectrum-coexistence engine for bands above 100 GHz.

#pragma once

#include <array>
#include <span>
#include <vector>

#include "thzprop/atmosphere.hpp"
#include "thzprop/core.hpp"

namespace thzprop {

/// One resonance line: center frequency plus the six shape/intensity
/// coefficients (a1..a6 for oxygen, b1..b6 for water vapor) of the
/// ITU-R P.676-13 spectroscopic tables.
struct SpectralLine {
    double center_frequency_ghz;
    std::array<double, 6> coeff;
};

std::span<const SpectralLine> oxygen_lines();
std::span<const SpectralLine> water_vapor_lines();

/// Incremental loss per unit path length, dB/km.
struct SpecificAttenuation {
    double db_per_km;
};

/// Line-by-line gaseous specific attenuation (oxygen + water vapor +
/// dry continuum), gamma = 0.1820 * f * N''(f). Valid 1-1000 GHz.
/// A state with zero pressure is treated as vacuum (0 dB/km).
SpecificAttenuation specific_gas_attenuation(FrequencyGhz f, const AtmosphericState& state);

/// Grid-scan local maxima of the specific attenuation on
/// [f_lo, f_hi] with the given step; reported at grid points, ascending.
std::vector<FrequencyGhz> find_absorption_peaks(FrequencyGhz f_lo, FrequencyGhz f_hi,
                                                const AtmosphericState& state,
                                                double grid_step_ghz);

} // namespace thzprop
