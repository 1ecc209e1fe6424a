// SPDX-License-Identifier: Apache-2.0
//
// Free-space loss, spherical-earth shell geometry and the layered slant
// integration that ties the atmosphere and gas modules together.

#include "thzprop/path_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "thzprop/gas_attenuation.hpp"

namespace thzprop {

namespace {

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

// Distance along the ray (km) from the launch radius r0 out to radius r,
// for launch elevation alpha: s(r) = sqrt(r^2 - (r0 cos a)^2) - r0 sin a.
double ray_distance_to_radius_km(double r0_km, double elevation_deg, double r_km) {
    const double cos_term = r0_km * std::cos(deg_to_rad(elevation_deg));
    return std::sqrt(r_km * r_km - cos_term * cos_term)
           - r0_km * std::sin(deg_to_rad(elevation_deg));
}

} // namespace

SlantPath::SlantPath(double ground_km, double top_km, double elevation_deg)
    : ground_altitude_km(ground_km), top_altitude_km(top_km),
      elevation_angle_deg(elevation_deg) {
    if (!std::isfinite(ground_km) || !std::isfinite(top_km) || ground_km < 0.0
        || ground_km >= top_km)
        throw std::domain_error("slant path requires 0 <= ground < top altitude");
    if (!std::isfinite(elevation_deg) || elevation_deg < 0.5 || elevation_deg > 90.0)
        throw std::domain_error("elevation angle must lie in [0.5, 90] degrees");
}

PathLossBreakdown PathLossBreakdown::assemble(double fspl_db, double gas_db, double rain_db,
                                              double clutter_db, double shadow_db,
                                              double scintillation_db) {
    for (double component : {fspl_db, gas_db, rain_db, clutter_db, shadow_db, scintillation_db}) {
        if (!std::isfinite(component) || component < 0.0)
            throw std::domain_error("path-loss components must be non-negative and finite");
    }
    PathLossBreakdown out;
    out.fspl_db = fspl_db;
    out.gas_db = gas_db;
    out.rain_db = rain_db;
    out.clutter_db = clutter_db;
    out.shadow_db = shadow_db;
    out.scintillation_db = scintillation_db;
    out.total_db = fspl_db + gas_db + rain_db + clutter_db + shadow_db + scintillation_db;
    return out;
}

DecibelQuantity fspl(FrequencyGhz f, double distance_m) {
    if (!std::isfinite(distance_m) || distance_m <= 0.0)
        throw std::domain_error("free-space loss requires a positive distance");
    const double f_hz = f.value * 1e9;
    return DecibelQuantity::relative_db(
        20.0 * std::log10(4.0 * std::numbers::pi * distance_m * f_hz / kSpeedOfLightMPerS));
}

double geometric_length_through_shell(const SlantPath& path, double shell_lo_km,
                                      double shell_hi_km) {
    if (!(path.ground_altitude_km <= shell_lo_km) || !(shell_lo_km < shell_hi_km)
        || !(shell_hi_km <= path.top_altitude_km))
        throw std::domain_error("shell bounds must satisfy ground <= lo < hi <= top");
    const double r0 = kEarthRadiusKm + path.ground_altitude_km;
    return ray_distance_to_radius_km(r0, path.elevation_angle_deg, kEarthRadiusKm + shell_hi_km)
           - ray_distance_to_radius_km(r0, path.elevation_angle_deg, kEarthRadiusKm + shell_lo_km);
}

DecibelQuantity slant_gas_attenuation(FrequencyGhz f, const AtmosphereProfile& profile,
                                      const SlantPath& path,
                                      std::span<const double> boundaries_km) {
    if (boundaries_km.size() < 2)
        throw std::domain_error("integration needs at least one layer");
    double total_db = 0.0;
    for (std::size_t i = 0; i + 1 < boundaries_km.size(); ++i) {
        const double lo = boundaries_km[i];
        const double hi = boundaries_km[i + 1];
        const double mid = 0.5 * (lo + hi);
        const double gamma = specific_gas_attenuation(f, state_at(profile, mid)).db_per_km;
        total_db += gamma * geometric_length_through_shell(path, lo, hi);
    }
    return DecibelQuantity::relative_db(total_db);
}

DecibelQuantity slant_gas_attenuation(FrequencyGhz f, const AtmosphereProfile& profile,
                                      const SlantPath& path) {
    SlantGasIntegrator integrator(f, profile, path.ground_altitude_km, path.top_altitude_km);
    return DecibelQuantity::relative_db(integrator.attenuation_db(path.elevation_angle_deg));
}

SlantGasIntegrator::SlantGasIntegrator(FrequencyGhz f, const AtmosphereProfile& profile,
                                       double ground_km, double top_km)
    : ground_km_(ground_km), top_km_(top_km) {
    const double cap_km = std::min(top_km, kAtmosphereTopKm);
    std::vector<double> boundaries = layer_boundaries(cap_km);
    if (ground_km > 0.0) {
        // Keep boundaries at or above the ground, with the ground itself first.
        std::vector<double> clipped{ground_km};
        for (double b : boundaries)
            if (b > ground_km)
                clipped.push_back(b);
        boundaries = std::move(clipped);
    }
    if (boundaries.size() < 2)
        throw std::domain_error("slant path too shallow for the integration grid");
    boundaries_km_ = std::move(boundaries);
    gamma_db_per_km_.reserve(boundaries_km_.size() - 1);
    for (std::size_t i = 0; i + 1 < boundaries_km_.size(); ++i) {
        const double mid = 0.5 * (boundaries_km_[i] + boundaries_km_[i + 1]);
        gamma_db_per_km_.push_back(specific_gas_attenuation(f, state_at(profile, mid)).db_per_km);
    }
}

double SlantGasIntegrator::attenuation_db(double elevation_deg) const {
    const SlantPath path(ground_km_, top_km_, elevation_deg);
    double total_db = 0.0;
    for (std::size_t i = 0; i + 1 < boundaries_km_.size(); ++i) {
        total_db += gamma_db_per_km_[i]
                    * geometric_length_through_shell(path, boundaries_km_[i],
                                                     boundaries_km_[i + 1]);
    }
    return total_db;
}

PathLossBreakdown total_slant_loss(FrequencyGhz f, double h_sat_km, double elevation_deg,
                                   const AtmosphereProfile& profile) {
    if (!std::isfinite(h_sat_km) || h_sat_km <= 0.0)
        throw std::domain_error("satellite altitude must be positive");
    const SlantPath path(0.0, h_sat_km, elevation_deg);
    // FSPL uses the h/sin(alpha) link distance; the spherical shells only
    // apportion the gas layers.
    const double distance_m = h_sat_km * 1e3 / std::sin(deg_to_rad(elevation_deg));
    const double fspl_db = fspl(f, distance_m).value();
    const double gas_db = slant_gas_attenuation(f, profile, path).value();
    return PathLossBreakdown::assemble(fspl_db, gas_db, 0.0, 0.0, 0.0, 0.0);
}

PathLossBreakdown total_terrestrial_loss(FrequencyGhz f, double distance_m, RainRate rate,
                                         const AtmosphereProfile& profile, Polarization pol) {
    const double fspl_db = fspl(f, distance_m).value();
    const double distance_km = distance_m * 1e-3;
    const double gas_db =
        specific_gas_attenuation(f, state_at(profile, 0.0)).db_per_km * distance_km;
    const double rain_db = specific_rain_attenuation(f, rate, pol).db_per_km * distance_km;
    return PathLossBreakdown::assemble(fspl_db, gas_db, rain_db, 0.0, 0.0, 0.0);
}

} // namespace thzprop
