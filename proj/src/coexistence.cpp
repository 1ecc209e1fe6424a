// SPDX-License-Identifier: Apache-2.0
//
// Passive-radiometer interference thresholding and aggregate-emitter
// analysis for the satellite coexistence study.

#include "thzprop/coexistence.hpp"

#include <cmath>
#include <stdexcept>

namespace thzprop {

DecibelQuantity interference_threshold(const RadiometerSpec& spec) {
    if (!std::isfinite(spec.delta_t_e_kelvin) || spec.delta_t_e_kelvin <= 0.0)
        throw std::domain_error("radiometric resolution delta T_e must be positive");
    if (!std::isfinite(spec.bandwidth_hz) || spec.bandwidth_hz <= 0.0)
        throw std::domain_error("bandwidth must be positive");
    if (!std::isfinite(spec.protection_margin_db) || spec.protection_margin_db < 0.0)
        throw std::domain_error("protection margin must be non-negative");
    const double delta_p_watts = kBoltzmannJPerK * spec.delta_t_e_kelvin * spec.bandwidth_hz;
    return DecibelQuantity::absolute_dbm(10.0 * std::log10(delta_p_watts * 1e3)
                                         - spec.protection_margin_db);
}

DecibelQuantity aggregate_interference(const DecibelQuantity& single_dbm, double device_count) {
    if (!single_dbm.is_absolute())
        throw std::invalid_argument("single-emitter level must be absolute dBm");
    if (!std::isfinite(device_count) || device_count < 1.0)
        throw std::domain_error("device count must be at least 1");
    return DecibelQuantity::absolute_dbm(single_dbm.value() + 10.0 * std::log10(device_count));
}

DeviceCapacity max_devices(const DecibelQuantity& single_dbm,
                           const DecibelQuantity& threshold_dbm) {
    if (!single_dbm.is_absolute() || !threshold_dbm.is_absolute())
        throw std::invalid_argument("max_devices compares absolute dBm levels");
    if (threshold_dbm.value() <= single_dbm.value())
        return {0.0, 0, true};
    const double count = std::pow(10.0, (threshold_dbm.value() - single_dbm.value()) / 10.0);
    return {count, static_cast<std::uint64_t>(std::floor(count)), false};
}

double pattern_gain_dbi(const AntennaPattern& pattern, double off_boresight_deg) {
    if (!std::isfinite(pattern.hpbw_deg) || pattern.hpbw_deg <= 0.0)
        throw std::domain_error("half-power beamwidth must be positive");
    if (!(pattern.sidelobe_floor_dbi < pattern.boresight_gain_dbi))
        throw std::domain_error("sidelobe floor must lie below the boresight gain");
    const double ratio = std::abs(off_boresight_deg) / pattern.hpbw_deg;
    const double mainlobe = pattern.boresight_gain_dbi - 12.0 * ratio * ratio;
    return std::max(mainlobe, pattern.sidelobe_floor_dbi);
}

DecibelQuantity uplink_interference_at_satellite(double tx_power_dbm,
                                                 const AntennaPattern& pattern,
                                                 double pointing_elevation_deg,
                                                 double satellite_elevation_deg,
                                                 const NtnLinkConfig& cfg) {
    for (double elevation : {pointing_elevation_deg, satellite_elevation_deg}) {
        if (!std::isfinite(elevation) || elevation < 0.5 || elevation > 90.0)
            throw std::domain_error("elevation angles must lie in [0.5, 90] degrees");
    }
    NtnLinkConfig at_satellite = cfg;
    at_satellite.elevation_deg = satellite_elevation_deg;
    const double offset_deg = std::abs(satellite_elevation_deg - pointing_elevation_deg);
    const double leak_gain_dbi = pattern_gain_dbi(pattern, offset_deg);
    const PathLossBreakdown pl = ntn_path_loss(at_satellite);
    // 0 dBi satellite receive gain: the published budget includes none.
    return DecibelQuantity::absolute_dbm(tx_power_dbm + leak_gain_dbi - pl.total_db);
}

} // namespace thzprop
