// SPDX-License-Identifier: Apache-2.0
//
// Specific rain attenuation gamma_R = k R^alpha with the frequency-dependent
// coefficient regressions of ITU-R P.838-3 (Tables 1-4).

#include "thzprop/rain_attenuation.hpp"

#include <cmath>
#include <stdexcept>

namespace thzprop {

namespace {

struct RegressionTerm {
    double a, b, c;
};

// log10 k = sum a_j exp(-((log10 f - b_j)/c_j)^2) + m log10 f + c
// alpha   = same functional form without the final power of ten.
struct Regression {
    const RegressionTerm* terms;
    int term_count;
    double m;
    double c;

    double evaluate(double log_f) const {
        double acc = m * log_f + c;
        for (int j = 0; j < term_count; ++j) {
            const double u = (log_f - terms[j].b) / terms[j].c;
            acc += terms[j].a * std::exp(-u * u);
        }
        return acc;
    }
};

constexpr RegressionTerm kTermsKH[] = {{-5.33980, -0.10008, 1.13098},
                                       {-0.35351, 1.26970, 0.45400},
                                       {-0.23789, 0.86036, 0.15354},
                                       {-0.94158, 0.64552, 0.16817}};
constexpr RegressionTerm kTermsKV[] = {{-3.80595, 0.56934, 0.81061},
                                       {-3.44965, -0.22911, 0.51059},
                                       {-0.39902, 0.73042, 0.11899},
                                       {0.50167, 1.07319, 0.27195}};
constexpr RegressionTerm kTermsAH[] = {{-0.14318, 1.82442, -0.55187},
                                       {0.29591, 0.77564, 0.19822},
                                       {0.32177, 0.63773, 0.13164},
                                       {-5.37610, -0.96230, 1.47828},
                                       {16.1721, -3.29980, 3.43990}};
constexpr RegressionTerm kTermsAV[] = {{-0.07771, 2.33840, -0.76284},
                                       {0.56727, 0.95545, 0.54039},
                                       {-0.20238, 1.14520, 0.26809},
                                       {-48.2991, 0.791669, 0.116226},
                                       {48.5833, 0.791459, 0.116479}};

constexpr Regression kRegressionKH{kTermsKH, 4, -0.18961, 0.71147};
constexpr Regression kRegressionKV{kTermsKV, 4, -0.16398, 0.63297};
constexpr Regression kRegressionAH{kTermsAH, 5, 0.67849, -1.95537};
constexpr Regression kRegressionAV{kTermsAV, 5, -0.053739, 0.83433};

void require_valid_rain_frequency(double f_ghz) {
    if (f_ghz < 1.0 || f_ghz > 1000.0)
        throw std::domain_error("rain model is valid for 1-1000 GHz only");
}

} // namespace

RainRate::RainRate(double rate) : mm_per_hour(rate) {
    if (!std::isfinite(rate) || rate < 0.0)
        throw std::domain_error("rain rate must be non-negative and finite");
}

RainCoefficients rain_coefficients(FrequencyGhz f, Polarization pol) {
    require_valid_rain_frequency(f.value);
    const double log_f = std::log10(f.value);
    const double k_h = std::pow(10.0, kRegressionKH.evaluate(log_f));
    const double k_v = std::pow(10.0, kRegressionKV.evaluate(log_f));
    const double a_h = kRegressionAH.evaluate(log_f);
    const double a_v = kRegressionAV.evaluate(log_f);
    switch (pol) {
    case Polarization::Horizontal:
        return {k_h, a_h, pol};
    case Polarization::Vertical:
        return {k_v, a_v, pol};
    case Polarization::Circular:
        // 45 degree tilt case of the recommendation's combining rule.
        return {0.5 * (k_h + k_v), (k_h * a_h + k_v * a_v) / (k_h + k_v), pol};
    }
    throw std::invalid_argument("unknown polarization");
}

SpecificAttenuation specific_rain_attenuation(FrequencyGhz f, RainRate rate, Polarization pol) {
    const RainCoefficients c = rain_coefficients(f, pol);
    if (rate.mm_per_hour == 0.0)
        return {0.0};
    return {c.k_coeff * std::pow(rate.mm_per_hour, c.alpha_exp)};
}

} // namespace thzprop
