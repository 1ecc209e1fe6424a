// SPDX-License-Identifier: Apache-2.0
//
// thzprop: propagation and spectrum-coexistence engine for bands above 100 GHz.

#pragma once

#include <cstddef>
#include <span>

#include "thzprop/core.hpp"

namespace thzprop {

/// One measured link: geometry, powers and gains of a single record.
struct MeasurementRecord {
    double distance_m;
    double tx_power_dbm;
    double tx_gain_dbi;
    double rx_gain_dbi;
    double rx_power_dbm;
    FrequencyGhz frequency;
};

/// Constant-offset excess-loss fit. std_dev_db is the population form
/// (divisor n) about the mean excess.
struct ExcessLossFit {
    double mean_excess_db;
    double std_dev_db;
    std::size_t n_records;
};

/// Measured path loss minus free-space loss for one record:
/// (tx + tx gain + rx gain - rx) - FSPL(f, d).
double excess_loss_db(const MeasurementRecord& record);

/// Mean and population standard deviation of per-record excess loss. The
/// mean is the least-squares constant offset. Records must share one
/// frequency to within 1 GHz.
ExcessLossFit fit_excess_loss(std::span<const MeasurementRecord> records);

} // namespace thzprop
