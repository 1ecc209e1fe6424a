// SPDX-License-Identifier: Apache-2.0
//
// thzprop: propagation and spectrum-coexistence engine for bands above 100 GHz.

#pragma once

#include <span>

namespace thzprop {

// Boltzmann constant as rounded in ITU-R S.2017 interference budgets.
// The TEMPEST-D golden values depend on this rounding; do not swap in CODATA.
inline constexpr double kBoltzmannJPerK = 1.38e-23;
inline constexpr double kSpeedOfLightMPerS = 299792458.0;

/// Carrier frequency in GHz. Always positive; each model enforces its own
/// validity sub-range on top of this (gas and rain: 1-1000 GHz).
struct FrequencyGhz {
    double value;
    explicit FrequencyGhz(double ghz);
};

enum class DbKind { Relative, AbsoluteDbm };

/// A decibel value that knows whether it is a relative ratio (dB) or an
/// absolute power level (dBm). The +/- operators enforce the usual algebra:
/// absolute +/- relative stays absolute, relative +/- relative stays
/// relative, the difference of two absolute levels is relative, and the sum
/// of two absolute levels is rejected.
class DecibelQuantity {
  public:
    static DecibelQuantity relative_db(double db) { return {db, DbKind::Relative}; }
    static DecibelQuantity absolute_dbm(double dbm) { return {dbm, DbKind::AbsoluteDbm}; }

    double value() const { return value_; }
    DbKind kind() const { return kind_; }
    bool is_absolute() const { return kind_ == DbKind::AbsoluteDbm; }

    DecibelQuantity operator+(const DecibelQuantity& rhs) const;
    DecibelQuantity operator-(const DecibelQuantity& rhs) const;

  private:
    DecibelQuantity(double v, DbKind k) : value_(v), kind_(k) {}
    double value_;
    DbKind kind_;
};

/// Power in watts, never negative.
struct PowerWatts {
    double value;
    explicit PowerWatts(double watts);
};

/// 10*log10(p * 1000); the x1000 is the W -> mW convention of dBm.
DecibelQuantity dbm_from_watts(PowerWatts p);

/// Inverse of dbm_from_watts. Input must be absolute (dBm).
PowerWatts watts_from_dbm(const DecibelQuantity& level);

/// Non-coherent power sum of absolute levels: 10*log10(sum 10^(Li/10)).
DecibelQuantity power_sum_db(std::span<const DecibelQuantity> levels);

} // namespace thzprop
