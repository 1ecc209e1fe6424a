// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "thzprop/ntn_link.hpp"

using namespace thzprop;

namespace {

NtnLinkConfig reference_config() {
    return {FrequencyGhz(165.0), 400.0, 10.0, 0.0, 0.0, 0.0, AtmosphereProfile::standard(), {}};
}

} // namespace

TEST_SUITE_BEGIN("ntn_link");

TEST_CASE("matches total_slant_loss when SF, CL and PL_s are zero") {
    const auto via_ntn = ntn_path_loss(reference_config());
    const auto via_geometry =
        total_slant_loss(FrequencyGhz(165.0), 400.0, 10.0, AtmosphereProfile::standard());
    CHECK(via_ntn.total_db == doctest::Approx(via_geometry.total_db).epsilon(1e-12));
    CHECK(via_ntn.fspl_db == doctest::Approx(via_geometry.fspl_db).epsilon(1e-12));
    CHECK(via_ntn.gas_db == doctest::Approx(via_geometry.gas_db).epsilon(1e-12));
}

TEST_CASE("clutter loss is exactly additive") {
    auto cfg = reference_config();
    const double base = ntn_path_loss(cfg).total_db;
    cfg.clutter_loss_db = 12.5;
    CHECK(ntn_path_loss(cfg).total_db - base == doctest::Approx(12.5).epsilon(1e-12));
    CHECK(ntn_path_loss(cfg).clutter_db == 12.5);
}

TEST_CASE("los helper clears clutter") {
    auto cfg = reference_config();
    cfg.clutter_loss_db = 20.0;
    CHECK(make_los(cfg).clutter_loss_db == 0.0);
    CHECK(make_los(cfg).shadow_fading_db == cfg.shadow_fading_db);
}

TEST_CASE("gas override pins the gas term") {
    auto cfg = reference_config();
    cfg.gas_override_db = 35.2;
    const auto pl = ntn_path_loss(cfg);
    CHECK(pl.gas_db == 35.2);
    // published worked example: 200 mW + 15 dBi toward a 0 dBi radiometer
    const double rx = received_power({10.0 * std::log10(200.0), 15.0}, pl, 0.0).value();
    CHECK(std::abs(rx - (-201.2)) <= 0.1);
}

TEST_CASE("received power arithmetic") {
    const auto pl = PathLossBreakdown::assemble(204.0, 35.2, 0, 0, 0, 0);
    const auto rx = received_power({23.0, 15.0}, pl, 0.0);
    CHECK(rx.is_absolute());
    CHECK(rx.value() == doctest::Approx(-201.2).epsilon(1e-9));

    SUBCASE("zero-loss identity") {
        const auto zero = PathLossBreakdown::assemble(0, 0, 0, 0, 0, 0);
        CHECK(received_power({23.0, 0.0}, zero, 0.0).value()
              == doctest::Approx(23.0).epsilon(1e-12));
    }
    SUBCASE("linearity in transmit power") {
        const double up3 = received_power({26.0, 15.0}, pl, 0.0).value();
        CHECK(up3 - rx.value() == doctest::Approx(3.0).epsilon(1e-12));
    }
    SUBCASE("affine with unit coefficients in every dB input") {
        const double base = received_power({23.0, 15.0}, pl, 0.0).value();
        CHECK(received_power({23.0 + 1.0, 15.0}, pl, 0.0).value() - base
              == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(received_power({23.0, 15.0 + 2.0}, pl, 0.0).value() - base
              == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(received_power({23.0, 15.0}, pl, 4.0).value() - base
              == doctest::Approx(4.0).epsilon(1e-12));
        const auto deeper = PathLossBreakdown::assemble(204.0 + 5.0, 35.2, 0, 0, 0, 0);
        CHECK(received_power({23.0, 15.0}, deeper, 0.0).value() - base
              == doctest::Approx(-5.0).epsilon(1e-12));
    }
}

TEST_CASE("shadow fading draw is seeded and deterministic") {
    const double a = draw_shadow_fading_db(4.0, 42);
    const double b = draw_shadow_fading_db(4.0, 42);
    CHECK(a == b);
    CHECK(draw_shadow_fading_db(0.0, 7) == 0.0);
    CHECK(draw_shadow_fading_db(4.0, 43) != a);
    CHECK_THROWS_AS(draw_shadow_fading_db(-1.0, 7), std::domain_error);
}

TEST_CASE("config validation") {
    auto cfg = reference_config();
    cfg.shadow_fading_db = -0.1;
    CHECK_THROWS_AS(ntn_path_loss(cfg), std::domain_error);
    cfg = reference_config();
    cfg.h_sat_km = 0.0;
    CHECK_THROWS_AS(ntn_path_loss(cfg), std::domain_error);
    cfg = reference_config();
    cfg.elevation_deg = 0.2;
    CHECK_THROWS_AS(ntn_path_loss(cfg), std::domain_error);
}

TEST_SUITE_END();
