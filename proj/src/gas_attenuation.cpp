// SPDX-License-Identifier: Apache-2.0
//
// Line-by-line gaseous specific attenuation, ITU-R P.676-13 Annex 1.

#include "thzprop/gas_attenuation.hpp"

#include <cmath>
#include <stdexcept>

namespace thzprop {

namespace {

constexpr double kGasFreqMinGhz = 1.0;
constexpr double kGasFreqMaxGhz = 1000.0;

void require_valid_gas_frequency(double f_ghz) {
    if (f_ghz < kGasFreqMinGhz || f_ghz > kGasFreqMaxGhz)
        throw std::domain_error("gas model is valid for 1-1000 GHz only");
}

void require_physical_state(const AtmosphericState& s, double vapor_pressure_hpa) {
    if (!std::isfinite(s.pressure_hpa) || s.pressure_hpa < 0.0)
        throw std::domain_error("pressure must be non-negative and finite");
    if (!std::isfinite(s.temperature_k) || s.temperature_k <= 0.0)
        throw std::domain_error("temperature must be positive and finite");
    if (!std::isfinite(s.water_vapor_density_gm3) || s.water_vapor_density_gm3 < 0.0)
        throw std::domain_error("water-vapor density must be non-negative and finite");
    if (vapor_pressure_hpa > s.pressure_hpa)
        throw std::domain_error("water-vapor partial pressure exceeds total pressure");
}

} // namespace

SpecificAttenuation specific_gas_attenuation(FrequencyGhz f, const AtmosphericState& state) {
    require_valid_gas_frequency(f.value);

    const double theta = 300.0 / state.temperature_k;
    // P.676-13 eq. (4): vapor partial pressure from density.
    const double e = state.water_vapor_density_gm3 * state.temperature_k / 216.7;
    require_physical_state(state, e);
    if (state.pressure_hpa == 0.0)
        return {0.0}; // vacuum
    const double p = state.pressure_hpa - e; // dry-air pressure

    const double fg = f.value;
    double n_oxygen = 0.0;
    for (const SpectralLine& line : oxygen_lines()) {
        const auto& a = line.coeff;
        const double f0 = line.center_frequency_ghz;
        // eq. (3)-(7): strength, width (with Zeeman floor), interference term.
        const double strength = a[0] * 1e-7 * p * theta * theta * theta
                                * std::exp(a[1] * (1.0 - theta));
        double width = a[2] * 1e-4 * (p * std::pow(theta, 0.8 - a[3]) + 1.1 * e * theta);
        width = std::sqrt(width * width + 2.25e-6);
        const double interference =
            (a[4] + a[5] * theta) * 1e-4 * (p + e) * std::pow(theta, 0.8);
        const double shape =
            fg / f0
            * ((width - interference * (f0 - fg)) / ((f0 - fg) * (f0 - fg) + width * width)
               + (width - interference * (f0 + fg)) / ((f0 + fg) * (f0 + fg) + width * width));
        n_oxygen += strength * shape;
    }

    // eq. (8)-(9): Debye spectrum plus pressure-induced nitrogen absorption.
    const double d = 5.6e-4 * (p + e) * std::pow(theta, 0.8);
    const double n_dry =
        fg * p * theta * theta
        * (6.14e-5 / (d * (1.0 + (fg / d) * (fg / d)))
           + 1.4e-12 * p * std::pow(theta, 1.5) / (1.0 + 1.9e-5 * std::pow(fg, 1.5)));

    double n_water = 0.0;
    for (const SpectralLine& line : water_vapor_lines()) {
        const auto& b = line.coeff;
        const double f0 = line.center_frequency_ghz;
        const double strength = b[0] * 1e-1 * e * std::pow(theta, 3.5)
                                * std::exp(b[1] * (1.0 - theta));
        double width = b[2] * 1e-4
                       * (p * std::pow(theta, b[3]) + b[4] * e * std::pow(theta, b[5]));
        // eq. (6b): Doppler broadening of water-vapor lines.
        width = 0.535 * width
                + std::sqrt(0.217 * width * width + 2.1316e-12 * f0 * f0 / theta);
        const double shape = fg / f0
                             * (width / ((f0 - fg) * (f0 - fg) + width * width)
                                + width / ((f0 + fg) * (f0 + fg) + width * width));
        n_water += strength * shape;
    }

    return {0.1820 * fg * (n_oxygen + n_dry + n_water)};
}

std::vector<FrequencyGhz> find_absorption_peaks(FrequencyGhz f_lo, FrequencyGhz f_hi,
                                                const AtmosphericState& state,
                                                double grid_step_ghz) {
    if (f_lo.value >= f_hi.value)
        throw std::domain_error("peak search range is empty");
    require_valid_gas_frequency(f_lo.value);
    require_valid_gas_frequency(f_hi.value);
    if (!std::isfinite(grid_step_ghz) || grid_step_ghz <= 0.0)
        throw std::domain_error("grid step must be positive");

    const double span = f_hi.value - f_lo.value;
    const auto count = static_cast<std::size_t>(span / grid_step_ghz + 1e-9) + 1;
    if (count > 10'000'000)
        throw std::domain_error("peak-search grid exceeds 1e7 points");

    std::vector<double> grid(count);
    std::vector<double> gamma(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = f_lo.value + static_cast<double>(i) * grid_step_ghz;
        gamma[i] = specific_gas_attenuation(FrequencyGhz(grid[i]), state).db_per_km;
    }

    std::vector<FrequencyGhz> peaks;
    for (std::size_t i = 1; i + 1 < count; ++i) {
        if (gamma[i] > gamma[i - 1] && gamma[i] > gamma[i + 1])
            peaks.emplace_back(grid[i]);
    }
    return peaks;
}

} // namespace thzprop
