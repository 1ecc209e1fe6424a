// SPDX-License-Identifier: Apache-2.0
//
// Non-terrestrial link budget: PL = PL_b + PL_g + PL_s with
// PL_b = FSPL(h/sin a, f_c) + SF + CL.

#include "thzprop/ntn_link.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace thzprop {

NtnLinkConfig make_los(NtnLinkConfig cfg) {
    cfg.clutter_loss_db = 0.0;
    return cfg;
}

double draw_shadow_fading_db(double sigma_db, std::uint64_t seed) {
    if (!std::isfinite(sigma_db) || sigma_db < 0.0)
        throw std::domain_error("shadow-fading sigma must be non-negative");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, sigma_db);
    return normal(rng);
}

PathLossBreakdown ntn_path_loss(const NtnLinkConfig& cfg) {
    if (!std::isfinite(cfg.h_sat_km) || cfg.h_sat_km <= 0.0)
        throw std::domain_error("satellite altitude must be positive");
    if (cfg.shadow_fading_db < 0.0 || cfg.clutter_loss_db < 0.0 || cfg.scintillation_db < 0.0)
        throw std::domain_error("SF, CL and PL_s must be non-negative");

    const double sin_elev = std::sin(cfg.elevation_deg * std::numbers::pi / 180.0);
    const SlantPath path(0.0, cfg.h_sat_km, cfg.elevation_deg);
    const double fspl_db = fspl(cfg.carrier, cfg.h_sat_km * 1e3 / sin_elev).value();
    const double gas_db = cfg.gas_override_db
                              ? *cfg.gas_override_db
                              : slant_gas_attenuation(cfg.carrier, cfg.profile, path).value();
    return PathLossBreakdown::assemble(fspl_db, gas_db, 0.0, cfg.clutter_loss_db,
                                       cfg.shadow_fading_db, cfg.scintillation_db);
}

DecibelQuantity received_power(const TransmitterSpec& tx, const PathLossBreakdown& pl,
                               double rx_gain_dbi) {
    if (!std::isfinite(tx.tx_power_dbm) || !std::isfinite(tx.antenna_gain_dbi)
        || !std::isfinite(rx_gain_dbi))
        throw std::domain_error("transmitter spec and receive gain must be finite");
    return DecibelQuantity::absolute_dbm(tx.tx_power_dbm + tx.antenna_gain_dbi + rx_gain_dbi
                                         - pl.total_db);
}

} // namespace thzprop
