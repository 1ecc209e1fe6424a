// SPDX-License-Identifier: Apache-2.0
//
// thzprop: propagation and spectrum-coexistence engine for bands above 100 GHz.

#pragma once

#include <cstdint>

#include "thzprop/core.hpp"
#include "thzprop/ntn_link.hpp"

namespace thzprop {

/// Passive-sensor sensitivity: radiometric resolution delta T_e, channel
/// bandwidth and the protection margin (the "SNR" subtracted from the noise
/// floor to get the permissible interference level).
struct RadiometerSpec {
    double delta_t_e_kelvin;
    double bandwidth_hz;
    double protection_margin_db;
};

/// Gaussian mainlobe with a hard sidelobe floor:
/// G(theta) = G0 - 12 (theta / HPBW)^2, clamped at sidelobe_floor_dbi.
struct AntennaPattern {
    double boresight_gain_dbi;
    double hpbw_deg;
    double sidelobe_floor_dbi;
};

/// Permissible interference: 10 log10(k dT B x 10^3) - margin, in dBm.
DecibelQuantity interference_threshold(const RadiometerSpec& spec);

/// Non-coherent aggregate of device_count equal emitters:
/// i_single + 10 log10(n). Accepts fractional counts (n >= 1).
DecibelQuantity aggregate_interference(const DecibelQuantity& single_dbm, double device_count);

struct DeviceCapacity {
    double count = 0.0;
    std::uint64_t floor_count = 0;
    bool single_device_exceeds = false;
};

/// Largest equal-emitter population that stays at the threshold:
/// 10^((threshold - i_single)/10). If one device already exceeds the
/// threshold the count is 0 with the exceedance flag set.
DeviceCapacity max_devices(const DecibelQuantity& single_dbm,
                           const DecibelQuantity& threshold_dbm);

double pattern_gain_dbi(const AntennaPattern& pattern, double off_boresight_deg);

/// Interference level seen by a 0 dBi satellite receiver from one ground
/// emitter: tx power + pattern gain at the pointing offset - NTN path loss
/// evaluated at the satellite elevation.
DecibelQuantity uplink_interference_at_satellite(double tx_power_dbm,
                                                 const AntennaPattern& pattern,
                                                 double pointing_elevation_deg,
                                                 double satellite_elevation_deg,
                                                 const NtnLinkConfig& cfg);

} // namespace thzprop
