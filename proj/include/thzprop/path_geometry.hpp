// SPDX-License-Identifier: Apache-2.0
//
// thzprop: propagation and spectrum-coexistence engine for bands above 100 GHz.

#pragma once

#include <span>
#include <vector>

#include "thzprop/atmosphere.hpp"
#include "thzprop/core.hpp"
#include "thzprop/rain_attenuation.hpp"

namespace thzprop {

inline constexpr double kEarthRadiusKm = 6371.0;

// Atmosphere is treated as vacuum above this altitude.
inline constexpr double kAtmosphereTopKm = 100.0;

/// Straight ground-to-altitude ray on a spherical earth.
/// Elevation below 0.5 degrees is rejected: the straight-ray shell geometry
/// degrades there and nothing in the validated range needs it.
struct SlantPath {
    double ground_altitude_km;
    double top_altitude_km;
    double elevation_angle_deg;
    SlantPath(double ground_km, double top_km, double elevation_deg);
};

/// Itemized loss ledger. total_db is always the sum of the components.
struct PathLossBreakdown {
    double fspl_db = 0.0;
    double gas_db = 0.0;
    double rain_db = 0.0;
    double clutter_db = 0.0;
    double shadow_db = 0.0;
    double scintillation_db = 0.0;
    double total_db = 0.0;

    static PathLossBreakdown assemble(double fspl_db, double gas_db, double rain_db,
                                      double clutter_db, double shadow_db,
                                      double scintillation_db);
};

/// Friis free space path loss 20*log10(4 pi d f / c).
DecibelQuantity fspl(FrequencyGhz f, double distance_m);

/// Ray length (km) inside the spherical shell [shell_lo, shell_hi] for the
/// path's launch point and elevation. Equals the shell thickness at 90 deg.
double geometric_length_through_shell(const SlantPath& path, double shell_lo_km,
                                      double shell_hi_km);

/// Layered slant-path gas attenuation: sum over layers of
/// gamma(f, state at layer midpoint) * length through the layer shell.
/// Layers come from layer_boundaries(min(top, 100 km)).
DecibelQuantity slant_gas_attenuation(FrequencyGhz f, const AtmosphereProfile& profile,
                                      const SlantPath& path);

/// Same integral over caller-supplied shell boundaries (ascending, first at
/// the path's ground altitude). Used for convergence and oracle checks.
DecibelQuantity slant_gas_attenuation(FrequencyGhz f, const AtmosphereProfile& profile,
                                      const SlantPath& path,
                                      std::span<const double> boundaries_km);

/// Precomputes the per-layer specific attenuation for one (frequency,
/// profile) so elevation sweeps do not re-evaluate the line-by-line model.
class SlantGasIntegrator {
  public:
    SlantGasIntegrator(FrequencyGhz f, const AtmosphereProfile& profile,
                       double ground_km, double top_km);
    double attenuation_db(double elevation_deg) const;

  private:
    double ground_km_;
    double top_km_;
    std::vector<double> boundaries_km_;
    std::vector<double> gamma_db_per_km_;
};

/// Earth-to-space total: FSPL over the h/sin(alpha) distance plus layered
/// gas attenuation. Rain, clutter, shadow and scintillation are zero here.
PathLossBreakdown total_slant_loss(FrequencyGhz f, double h_sat_km, double elevation_deg,
                                   const AtmosphereProfile& profile);

/// Horizontal homogeneous terrestrial path at sea level:
/// FSPL(d) + gamma_gas * d + gamma_rain * d.
PathLossBreakdown total_terrestrial_loss(FrequencyGhz f, double distance_m, RainRate rate,
                                         const AtmosphereProfile& profile, Polarization pol);

} // namespace thzprop
