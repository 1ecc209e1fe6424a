// SPDX-License-Identifier: Apache-2.0
//
// thzprop: propagation and spectrum-coexistence engine for bands above 100 GHz.

#pragma once

#include <vector>

namespace thzprop {

/// Pressure, temperature and water-vapor density at one altitude.
struct AtmosphericState {
    double pressure_hpa;
    double temperature_k;
    double water_vapor_density_gm3;
};

enum class ProfileKind { ReferenceMeanAnnual };

/// Vertical profile parameterized by the surface water-vapor density.
/// Pressure and temperature follow the ITU-R P.835 mean annual global
/// reference atmosphere; water vapor decays as rho0 * exp(-z / 2 km).
struct AtmosphereProfile {
    double surface_water_vapor_density_gm3 = 7.5;
    ProfileKind kind = ProfileKind::ReferenceMeanAnnual;

    static AtmosphereProfile standard() { return {7.5, ProfileKind::ReferenceMeanAnnual}; }
    static AtmosphereProfile dry() { return {0.0, ProfileKind::ReferenceMeanAnnual}; }
};

/// Evaluate the profile at a geometric altitude in [0, 100] km.
AtmosphericState state_at(const AtmosphereProfile& profile, double altitude_km);

/// Integration grid for slant paths: boundaries starting at 0 with layer
/// thickness delta_i = 0.0001 * exp((i-1)/100) km (the ITU-R P.676 layering),
/// truncated so the last boundary does not exceed max_altitude_km.
std::vector<double> layer_boundaries(double max_altitude_km);

} // namespace thzprop
