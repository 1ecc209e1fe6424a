// SPDX-License-Identifier: Apache-2.0
//
// thzprop: propagation and spectrum-coexistence engine for bands above 100 GHz.

#pragma once

#include <cstdint>
#include <optional>

#include "thzprop/atmosphere.hpp"
#include "thzprop/core.hpp"
#include "thzprop/path_geometry.hpp"

namespace thzprop {

/// Ground-to-satellite link description: PL = FSPL(h/sin a) + gas + SF + CL + PL_s.
/// Shadow fading defaults to 0 (the median of the log-normal); scintillation
/// is carried as an input, not modeled. gas_override_db pins the gas term to
/// a stated value instead of the layered integral (used to reproduce
/// published budgets).
struct NtnLinkConfig {
    FrequencyGhz carrier;
    double h_sat_km;
    double elevation_deg;
    double shadow_fading_db = 0.0;
    double clutter_loss_db = 0.0;
    double scintillation_db = 0.0;
    AtmosphereProfile profile = AtmosphereProfile::standard();
    std::optional<double> gas_override_db;
};

struct TransmitterSpec {
    double tx_power_dbm;
    double antenna_gain_dbi;
};

/// Sets clutter loss to zero: with the transmitter in line of sight of the
/// satellite the clutter term is negligible.
NtnLinkConfig make_los(NtnLinkConfig cfg);

/// One seeded draw of the log-normal shadow fading term (normal in dB).
double draw_shadow_fading_db(double sigma_db, std::uint64_t seed);

PathLossBreakdown ntn_path_loss(const NtnLinkConfig& cfg);

/// tx power + tx gain + rx gain - total path loss, as absolute dBm.
DecibelQuantity received_power(const TransmitterSpec& tx, const PathLossBreakdown& pl,
                               double rx_gain_dbi);

} // namespace thzprop
