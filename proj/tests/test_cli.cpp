// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "thzprop/cli.hpp"
#include "thzprop/path_geometry.hpp"

using thzprop::cli::run;
using thzprop::cli::ScenarioConfig;
using thzprop::cli::SweepSpec;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream stream(text);
    std::string line;
    while (std::getline(stream, line))
        lines.push_back(line);
    return lines;
}

std::size_t comma_count(const std::string& line) {
    std::size_t n = 0;
    for (char c : line)
        n += c == ',';
    return n;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/thzprop_test_") + name;
    std::ofstream file(path);
    file << content;
    return path;
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("gas single point emits one row near the quoted value") {
    const auto r = invoke({"gas", "--freq-ghz", "300", "--altitude-km", "0", "--atmosphere",
                           "standard"});
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "frequency_ghz,gamma_db_per_km");
    const double gamma = std::stod(lines[1].substr(lines[1].find(',') + 1));
    CHECK(std::abs(gamma - 6.0) <= 2.0);
}

TEST_CASE("gas below the validity floor is a domain error") {
    const auto r = invoke({"gas", "--freq-ghz", "0.5"});
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("1-1000") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("usage errors exit with 2") {
    CHECK(invoke({"gas", "--no-such-flag", "1"}).exit_code == 2);
    CHECK(invoke({"no-such-command"}).exit_code == 2);
    CHECK(invoke({}).exit_code == 2);
    CHECK(invoke({"figure", "5"}).exit_code == 2);
    CHECK(invoke({"gas", "--freq-ghz", "10:1:1"}).exit_code == 2);   // inverted sweep
    CHECK(invoke({"gas", "--freq-ghz", "1:10:0"}).exit_code == 2);   // zero step
    CHECK(invoke({"rain", "--freq-ghz", "abc", "--rate-mm-h", "25"}).exit_code == 2);
}

TEST_CASE("sweep grammar") {
    const auto r = invoke({"gas", "--freq-ghz", "100:102:1"});
    REQUIRE(r.exit_code == 0);
    CHECK(lines_of(r.out).size() == 4); // header + 3 rows

    CHECK(SweepSpec(1.0, 2.0, 0.5).values() == std::vector<double>{1.0, 1.5, 2.0});
    CHECK(SweepSpec(5.0, 5.0, 1.0).values() == std::vector<double>{5.0});
    CHECK_THROWS(SweepSpec(0.0, 1e9, 1e-3)); // over the sweep-size guard
    CHECK_THROWS(SweepSpec(2.0, 1.0, 0.5));
}

TEST_CASE("rain subcommand emits the documented csv") {
    const auto r = invoke({"rain", "--freq-ghz", "100", "--rate-mm-h", "0.25,25", "--pol", "h"});
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "frequency_ghz,rate_mm_h,gamma_db_per_km");
    CHECK(lines[1].rfind("100,0.25,", 0) == 0);
}

TEST_CASE("slant subcommand carries the full breakdown") {
    const auto r = invoke({"slant", "--freq-ghz", "165", "--sat-alt-km", "400", "--elev-deg",
                           "10:90:40"});
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0]
          == "frequency_ghz,sat_alt_km,elevation_deg,fspl_db,gas_db,rain_db,clutter_db,"
             "shadow_db,scintillation_db,total_db");
    for (std::size_t i = 1; i < lines.size(); ++i)
        CHECK(comma_count(lines[i]) == comma_count(lines[0]));
}

TEST_CASE("slant sweep emits the full grid and matches the library") {
    const auto r = invoke({"slant", "--freq-ghz", "165:183:18", "--sat-alt-km", "20,400",
                           "--elev-deg", "10:90:40"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(lines_of(r.out).size() == 1 + 2 * 2 * 3);

    // A platform inside the atmosphere only accumulates gas up to its own
    // altitude. At 118.75 GHz the narrow high-altitude oxygen line core
    // contributes hundreds of dB above 20 km, so truncation must show.
    const auto haps = invoke({"slant", "--freq-ghz", "118.75", "--sat-alt-km", "20",
                              "--elev-deg", "10"});
    REQUIRE(haps.exit_code == 0);
    const auto row = lines_of(haps.out)[1];
    std::stringstream fields(row);
    std::string field;
    std::vector<std::string> cells;
    while (std::getline(fields, field, ','))
        cells.push_back(field);
    const double gas_db = std::stod(cells[4]);
    const auto expected =
        thzprop::total_slant_loss(thzprop::FrequencyGhz(118.75), 20.0, 10.0,
                                  thzprop::AtmosphereProfile::standard());
    CHECK(gas_db == doctest::Approx(expected.gas_db).epsilon(1e-4));
    CHECK(gas_db < 300.0); // the full-atmosphere value at this line is ~582 dB
}

TEST_CASE("surface vapor override changes the gas result") {
    const auto base = invoke({"gas", "--freq-ghz", "300"});
    const auto wetter = invoke({"gas", "--freq-ghz", "300", "--surface-vapor", "15"});
    REQUIRE(base.exit_code == 0);
    REQUIRE(wetter.exit_code == 0);
    const double g0 = std::stod(lines_of(base.out)[1].substr(4));
    const double g1 = std::stod(lines_of(wetter.out)[1].substr(4));
    CHECK(g1 > 1.5 * g0);
}

TEST_CASE("terrestrial subcommand") {
    const auto r = invoke({"terrestrial", "--freq-ghz", "140", "--dist-m", "1,1000",
                           "--rate-mm-h", "0,100"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(lines_of(r.out).size() == 5);
}

TEST_CASE("ntn-budget prints a ledger and csv") {
    const auto r = invoke({"ntn-budget", "--freq-ghz", "165", "--sat-alt-km", "400",
                           "--elev-deg", "10", "--tx-power-dbm", "23.0103", "--tx-gain-dbi",
                           "15", "--gas-override-db", "35.2"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("received power       -201.2 dBm") != std::string::npos);
    CHECK(r.out.find("received_dbm") != std::string::npos);
    CHECK(r.out.find("(pinned)") != std::string::npos);
}

TEST_CASE("ntn-budget shadow draw requires a seed") {
    const auto r = invoke({"ntn-budget", "--freq-ghz", "165", "--sat-alt-km", "400",
                           "--elev-deg", "10", "--tx-power-dbm", "23", "--tx-gain-dbi", "15",
                           "--sf-sigma-db", "4"});
    CHECK(r.exit_code == 2);

    const std::vector<std::string> seeded{"ntn-budget", "--freq-ghz", "165", "--sat-alt-km",
                                          "400", "--elev-deg", "10", "--tx-power-dbm", "23",
                                          "--tx-gain-dbi", "15", "--sf-sigma-db", "4",
                                          "--seed", "11"};
    const auto a = invoke(seeded);
    const auto b = invoke(seeded);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("coexist scenario reproduces the worked satellite budget") {
    const std::string path = write_temp("tempest.cfg",
                                        "# TEMPEST-D interference scenario\n"
                                        "freq_ghz = 165\n"
                                        "sat_alt_km = 400\n"
                                        "sat_elev_deg = 10\n"
                                        "tx_power_dbm = 23.0103\n"
                                        "tx_gain_dbi = 15\n"
                                        "tx_hpbw_deg = 8\n"
                                        "delta_t_kelvin = 0.1\n"
                                        "bandwidth_hz = 200e6\n"
                                        "margin_db = 7\n"
                                        "gas_override_db = 35.2\n");
    const auto r = invoke({"coexist", "--config", path});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("-201.2 dBm") != std::string::npos);

    // the csv row carries the device capacity; expect about 6.6 million
    const auto lines = lines_of(r.out);
    const auto& data = lines.back();
    std::stringstream row(data);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ','))
        fields.push_back(field);
    REQUIRE(fields.size() == 13);
    const double devices = std::stod(fields[10]);
    CHECK(std::abs(devices - 6.6e6) / 6.6e6 < 0.12);
    std::remove(path.c_str());
}

TEST_CASE("coexist config is fail-closed") {
    const std::string unknown = write_temp("bad1.cfg",
                                           "freq_ghz = 165\nsat_alt_km = 400\n"
                                           "sat_elev_deg = 10\ntx_power_dbm = 23\n"
                                           "tx_gain_dbi = 15\ndelta_t_kelvin = 0.1\n"
                                           "bandwidth_hz = 200e6\nmargin_db = 7\n"
                                           "freq_ghz_typo = 165\n");
    auto r = invoke({"coexist", "--config", unknown});
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("unknown key") != std::string::npos);
    std::remove(unknown.c_str());

    const std::string duplicate = write_temp("bad2.cfg", "freq_ghz = 165\nfreq_ghz = 170\n");
    r = invoke({"coexist", "--config", duplicate});
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("duplicate key") != std::string::npos);
    std::remove(duplicate.c_str());

    const std::string missing = write_temp("bad3.cfg", "freq_ghz = 165\n");
    r = invoke({"coexist", "--config", missing});
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("missing required") != std::string::npos);
    std::remove(missing.c_str());
}

TEST_CASE("scenario config parsing details") {
    constexpr std::string_view allowed[] = {"alpha", "beta"};
    std::stringstream ok("# comment\n  alpha = 1.5  # trailing comment\n\nbeta = two\n");
    const auto cfg = ScenarioConfig::parse(ok, allowed);
    CHECK(cfg.number("alpha") == doctest::Approx(1.5));
    CHECK(cfg.text_or("beta", "") == "two");
    CHECK(cfg.number_or("gamma", 4.0) == 4.0);
    CHECK_THROWS_AS(cfg.number("beta"), std::domain_error);

    std::stringstream no_eq("alpha 1.5\n");
    CHECK_THROWS_AS(ScenarioConfig::parse(no_eq, allowed), std::domain_error);
}

TEST_CASE("fit subcommand round-trips synthetic records") {
    // rx = tx + gains - fspl - 7.1 at 142 GHz; fspl(142 GHz, 70 m) = 112.297 dB
    std::ostringstream csv;
    csv << "distance_m,tx_power_dbm,tx_gain_dbi,rx_gain_dbi,rx_power_dbm,frequency_ghz\n";
    for (double d : {40.0, 70.0, 110.0, 180.0}) {
        const double fspl_db =
            20.0 * std::log10(4.0 * 3.14159265358979323846 * d * 142e9 / 299792458.0);
        csv << d << ",10,27,27," << (10 + 27 + 27 - fspl_db - 7.1) << ",142\n";
    }
    const std::string path = write_temp("fit.csv", csv.str());
    const auto r = invoke({"fit", "--input", path});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("mean excess          7.1 dB") != std::string::npos);
    CHECK(r.out.find("mean_excess_db,std_dev_db,n_records") != std::string::npos);
    CHECK(r.out.find("7.10,0.00,4") != std::string::npos);
    std::remove(path.c_str());

    const std::string bad_header = write_temp("fit_bad.csv", "distance,tx\n1,2\n");
    CHECK(invoke({"fit", "--input", bad_header}).exit_code == 1);
    std::remove(bad_header.c_str());
}

TEST_CASE("figure datasets are deterministic and well-formed") {
    for (int n : {2, 3, 4, 6}) {
        std::ostringstream first, second, err;
        REQUIRE(run({"figure", std::to_string(n)}, first, err) == 0);
        REQUIRE(run({"figure", std::to_string(n)}, second, err) == 0);
        CHECK(first.str() == second.str());

        const auto lines = lines_of(first.str());
        REQUIRE(lines.size() > 1);
        const std::size_t header_commas = comma_count(lines[0]);
        for (const auto& line : lines) {
            CHECK(comma_count(line) == header_commas);
            CHECK(line.find('\r') == std::string::npos);
        }
    }
}

TEST_CASE("figure row counts match the default grids") {
    std::ostringstream out, err;
    REQUIRE(run({"figure", "2"}, out, err) == 0);
    CHECK(lines_of(out.str()).size() == 1 + 4 * 1000);

    std::ostringstream out3;
    REQUIRE(run({"figure", "3"}, out3, err) == 0);
    CHECK(lines_of(out3.str()).size() == 1 + 7 * 1000);

    std::ostringstream out4;
    REQUIRE(run({"figure", "4"}, out4, err) == 0);
    CHECK(lines_of(out4.str()).size() == 1 + 4 * 3 * 180);

    std::ostringstream out6;
    REQUIRE(run({"figure", "6"}, out6, err) == 0);
    CHECK(lines_of(out6.str()).size() == 1 + 8 * 14);
}

TEST_CASE("output file option") {
    const std::string path = "/tmp/thzprop_test_out.csv";
    const auto r = invoke({"gas", "--freq-ghz", "300", "--out", path});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream file(path);
    std::string header;
    std::getline(file, header);
    CHECK(header == "frequency_ghz,gamma_db_per_km");
    std::remove(path.c_str());
}

TEST_CASE("installed binary answers a smoke query") {
    const std::string cmd = std::string(THZPROP_BIN_PATH)
                            + " gas --freq-ghz 300 --altitude-km 0 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[256];
    while (fgets(buf, sizeof buf, pipe))
        output += buf;
    const int status = pclose(pipe);
    CHECK(status == 0);
    CHECK(output.rfind("frequency_ghz", 0) == 0);
}

TEST_SUITE_END();
