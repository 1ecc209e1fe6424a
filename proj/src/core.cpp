// SPDX-License-Identifier: Apache-2.0

#include "thzprop/core.hpp"

#include <cmath>
#include <stdexcept>

namespace thzprop {

FrequencyGhz::FrequencyGhz(double ghz) : value(ghz) {
    if (!std::isfinite(ghz) || ghz <= 0.0)
        throw std::domain_error("frequency must be a positive finite value in GHz");
}

PowerWatts::PowerWatts(double watts) : value(watts) {
    if (!std::isfinite(watts) || watts < 0.0)
        throw std::domain_error("power must be non-negative and finite");
}

DecibelQuantity DecibelQuantity::operator+(const DecibelQuantity& rhs) const {
    if (is_absolute() && rhs.is_absolute())
        throw std::invalid_argument("adding two absolute dBm levels is meaningless; "
                                    "use power_sum_db for non-coherent combining");
    DbKind kind = (is_absolute() || rhs.is_absolute()) ? DbKind::AbsoluteDbm : DbKind::Relative;
    return {value_ + rhs.value_, kind};
}

DecibelQuantity DecibelQuantity::operator-(const DecibelQuantity& rhs) const {
    if (!is_absolute() && rhs.is_absolute())
        throw std::invalid_argument("cannot subtract an absolute dBm level from a relative dB value");
    // abs - abs is a relative difference; abs - rel stays absolute.
    DbKind kind = (is_absolute() && !rhs.is_absolute()) ? DbKind::AbsoluteDbm : DbKind::Relative;
    return {value_ - rhs.value_, kind};
}

DecibelQuantity dbm_from_watts(PowerWatts p) {
    if (p.value <= 0.0)
        throw std::domain_error("dbm_from_watts requires strictly positive power");
    return DecibelQuantity::absolute_dbm(10.0 * std::log10(p.value * 1e3));
}

PowerWatts watts_from_dbm(const DecibelQuantity& level) {
    if (!level.is_absolute())
        throw std::invalid_argument("watts_from_dbm requires an absolute dBm level");
    return PowerWatts(std::pow(10.0, level.value() / 10.0) * 1e-3);
}

DecibelQuantity power_sum_db(std::span<const DecibelQuantity> levels) {
    if (levels.empty())
        throw std::domain_error("power_sum_db requires at least one level");
    double sum_mw = 0.0;
    for (const auto& level : levels) {
        if (!level.is_absolute())
            throw std::invalid_argument("power_sum_db combines absolute dBm levels only");
        sum_mw += std::pow(10.0, level.value() / 10.0);
    }
    return DecibelQuantity::absolute_dbm(10.0 * std::log10(sum_mw));
}

} // namespace thzprop
