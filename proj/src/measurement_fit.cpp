// SPDX-License-Identifier: Apache-2.0
//
// Constant-offset excess-loss fit: mean loss beyond free space and its
// population standard deviation over a set of measurement records.

#include "thzprop/measurement_fit.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "thzprop/path_geometry.hpp"

namespace thzprop {

namespace {

void require_valid(const MeasurementRecord& r) {
    if (!std::isfinite(r.distance_m) || r.distance_m <= 0.0)
        throw std::domain_error("record distance must be positive");
    for (double v : {r.tx_power_dbm, r.tx_gain_dbi, r.rx_gain_dbi, r.rx_power_dbm}) {
        if (!std::isfinite(v))
            throw std::domain_error("record fields must be finite");
    }
}

} // namespace

double excess_loss_db(const MeasurementRecord& record) {
    require_valid(record);
    const double measured_loss_db = record.tx_power_dbm + record.tx_gain_dbi
                                    + record.rx_gain_dbi - record.rx_power_dbm;
    return measured_loss_db - fspl(record.frequency, record.distance_m).value();
}

ExcessLossFit fit_excess_loss(std::span<const MeasurementRecord> records) {
    if (records.empty())
        throw std::domain_error("excess-loss fit requires at least one record");
    double f_min = records.front().frequency.value;
    double f_max = f_min;
    for (const auto& r : records) {
        f_min = std::min(f_min, r.frequency.value);
        f_max = std::max(f_max, r.frequency.value);
    }
    if (f_max - f_min > 1.0)
        throw std::domain_error("records must share one frequency to within 1 GHz");

    std::vector<double> excess;
    excess.reserve(records.size());
    for (const auto& r : records)
        excess.push_back(excess_loss_db(r));

    // The mean is the least-squares constant for the offset model.
    double mean = 0.0;
    for (double x : excess)
        mean += x;
    mean /= static_cast<double>(excess.size());

    double variance = 0.0; // population form, divisor n
    for (double x : excess)
        variance += (x - mean) * (x - mean);
    variance /= static_cast<double>(excess.size());

    return {mean, std::sqrt(variance), records.size()};
}

} // namespace thzprop
