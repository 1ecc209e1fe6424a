// SPDX-License-Identifier: Apache-2.0
//
// thzprop: propagation and spectrum-coexistence engine for bands above 100 GHz.

#pragma once

#include "thzprop/core.hpp"
#include "thzprop/gas_attenuation.hpp"

namespace thzprop {

struct RainRate {
    double mm_per_hour;
    explicit RainRate(double rate);
};

enum class Polarization { Horizontal, Vertical, Circular };

/// Power-law coefficients of gamma_R = k * R^alpha (ITU-R P.838-3).
/// Circular coefficients combine H and V with the recommendation's rule at
/// 45 degree tilt: k_c = (k_H + k_V)/2, alpha_c = (k_H a_H + k_V a_V)/(k_H + k_V).
struct RainCoefficients {
    double k_coeff;
    double alpha_exp;
    Polarization polarization;
};

/// Evaluate the log-Gaussian regression for k and alpha. Valid 1-1000 GHz.
RainCoefficients rain_coefficients(FrequencyGhz f, Polarization pol);

/// gamma_R = k * R^alpha in dB/km; exactly 0 for R = 0.
SpecificAttenuation specific_rain_attenuation(FrequencyGhz f, RainRate rate, Polarization pol);

} // namespace thzprop
