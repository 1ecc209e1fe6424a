// SPDX-License-Identifier: Apache-2.0
//
// ITU-R P.835 mean annual global reference atmosphere, with the P.676
// exponential layering grid used for slant-path integration.

#include "thzprop/atmosphere.hpp"

#include <cmath>
#include <stdexcept>

namespace thzprop {

namespace {

// Geometric altitude (km) -> geopotential height (km'), P.835 eq. for h'.
double geopotential_km(double z_km) {
    return 6356.766 * z_km / (6356.766 + z_km);
}

double temperature_k(double z_km) {
    const double h = geopotential_km(z_km);
    if (h <= 11.0) return 288.15 - 6.5 * h;
    if (h <= 20.0) return 216.65;
    if (h <= 32.0) return 216.65 + (h - 20.0);
    if (h <= 47.0) return 228.65 + 2.8 * (h - 32.0);
    if (h <= 51.0) return 270.65;
    if (h <= 71.0) return 270.65 - 2.8 * (h - 51.0);
    if (h <= 84.852) return 214.65 - 2.0 * (h - 71.0);
    // 86..100 km geometric
    if (z_km <= 91.0) return 186.8673;
    const double t = (z_km - 91.0) / 19.9429;
    return 263.1905 - 76.3232 * std::sqrt(std::max(0.0, 1.0 - t * t));
}

double pressure_hpa(double z_km) {
    const double h = geopotential_km(z_km);
    if (h <= 11.0)
        return 1013.25 * std::pow(288.15 / (288.15 - 6.5 * h), -34.1632 / 6.5);
    if (h <= 20.0)
        return 226.3226 * std::exp(-34.1632 * (h - 11.0) / 216.65);
    if (h <= 32.0)
        return 54.74980 * std::pow(216.65 / (216.65 + (h - 20.0)), 34.1632);
    if (h <= 47.0)
        return 8.680422 * std::pow(228.65 / (228.65 + 2.8 * (h - 32.0)), 34.1632 / 2.8);
    if (h <= 51.0)
        return 1.109106 * std::exp(-34.1632 * (h - 47.0) / 270.65);
    if (h <= 71.0)
        return 0.6694167 * std::pow(270.65 / (270.65 - 2.8 * (h - 51.0)), -34.1632 / 2.8);
    if (h <= 84.852)
        return 0.03956649 * std::pow(214.65 / (214.65 - 2.0 * (h - 71.0)), -34.1632 / 2.0);
    const double z = z_km;
    return std::exp(95.571899 - 4.011801 * z + 6.424731e-2 * z * z - 4.789660e-4 * z * z * z
                    + 1.340543e-6 * z * z * z * z);
}

constexpr double kWaterVaporScaleHeightKm = 2.0;

} // namespace

AtmosphericState state_at(const AtmosphereProfile& profile, double altitude_km) {
    if (!std::isfinite(altitude_km) || altitude_km < 0.0 || altitude_km > 100.0)
        throw std::domain_error("altitude must lie in [0, 100] km");
    if (!(profile.surface_water_vapor_density_gm3 >= 0.0))
        throw std::domain_error("surface water-vapor density must be non-negative");
    return {pressure_hpa(altitude_km), temperature_k(altitude_km),
            profile.surface_water_vapor_density_gm3
                * std::exp(-altitude_km / kWaterVaporScaleHeightKm)};
}

std::vector<double> layer_boundaries(double max_altitude_km) {
    if (!std::isfinite(max_altitude_km) || max_altitude_km <= 0.0)
        throw std::domain_error("maximum altitude must be positive");
    std::vector<double> boundaries{0.0};
    for (int i = 1;; ++i) {
        const double thickness = 0.0001 * std::exp((i - 1) / 100.0);
        const double next = boundaries.back() + thickness;
        if (next > max_altitude_km)
            break;
        boundaries.push_back(next);
    }
    return boundaries;
}

} // namespace thzprop
