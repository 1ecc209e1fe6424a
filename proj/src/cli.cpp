// SPDX-License-Identifier: Apache-2.0
//
// Subcommand front end: argument parsing, scenario configs, sweeps and the
// CSV datasets behind the reproduced figures.

#include "thzprop/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "thzprop/atmosphere.hpp"
#include "thzprop/coexistence.hpp"
#include "thzprop/core.hpp"
#include "thzprop/gas_attenuation.hpp"
#include "thzprop/measurement_fit.hpp"
#include "thzprop/ntn_link.hpp"
#include "thzprop/path_geometry.hpp"
#include "thzprop/rain_attenuation.hpp"

namespace thzprop::cli {

namespace {

// Argv mistakes that CLI11 cannot catch itself (malformed sweeps, lists).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}
std::string num(double v) { return fmt("%.6g", v); }   // coordinates, gammas
std::string db_csv(double v) { return fmt("%.2f", v); } // dB at 0.01 resolution
std::string db_human(double v) { return fmt("%.1f", v); }

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v))
            throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError("cannot parse '" + text + "' as a number for " + what);
    }
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
    std::vector<double> out;
    std::string item;
    std::stringstream stream(text);
    while (std::getline(stream, item, ','))
        out.push_back(parse_double(trim(item), what));
    if (out.empty())
        throw UsageError("empty list for " + what);
    return out;
}

Polarization parse_polarization(const std::string& text) {
    if (text == "h") return Polarization::Horizontal;
    if (text == "v") return Polarization::Vertical;
    if (text == "c") return Polarization::Circular;
    throw UsageError("polarization must be one of h, v, c");
}

struct AtmosphereArgs {
    std::string name = "standard";
    double surface_vapor_gm3 = -1.0; // <0: use the preset's default

    AtmosphereProfile profile() const {
        AtmosphereProfile p;
        if (name == "standard")
            p = AtmosphereProfile::standard();
        else if (name == "dry")
            p = AtmosphereProfile::dry();
        else
            throw UsageError("atmosphere must be 'standard' or 'dry'");
        if (surface_vapor_gm3 >= 0.0)
            p.surface_water_vapor_density_gm3 = surface_vapor_gm3;
        return p;
    }
};

const std::vector<double> kFigureRainRates{0.25, 1, 4, 25, 50, 100, 150};
const std::vector<double> kFigure4FrequenciesGhz{165, 183, 325, 425};
const std::vector<double> kFigure4AltitudesKm{400, 8000, 36000};
const std::vector<double> kFigure6DistancesM{1,   2,   5,    10,   20,   50,   100,
                                             200, 500, 1000, 2000, 5000, 10000, 20000};

void write_breakdown_row(std::ostream& out, const PathLossBreakdown& pl) {
    out << db_csv(pl.fspl_db) << ',' << db_csv(pl.gas_db) << ',' << db_csv(pl.rain_db) << ','
        << db_csv(pl.clutter_db) << ',' << db_csv(pl.shadow_db) << ','
        << db_csv(pl.scintillation_db) << ',' << db_csv(pl.total_db);
}

void write_figure_2(std::ostream& out) {
    out << "frequency_ghz,gamma_db_per_km,altitude_km,condition\n";
    for (double altitude_km : {0.0, 10.0}) {
        for (const char* condition : {"standard", "dry"}) {
            const AtmosphereProfile profile = condition == std::string("standard")
                                                  ? AtmosphereProfile::standard()
                                                  : AtmosphereProfile::dry();
            const AtmosphericState state = state_at(profile, altitude_km);
            for (int f = 1; f <= 1000; ++f) {
                const double gamma =
                    specific_gas_attenuation(FrequencyGhz(f), state).db_per_km;
                out << f << ',' << num(gamma) << ',' << num(altitude_km) << ',' << condition
                    << '\n';
            }
        }
    }
}

void write_figure_3(std::ostream& out) {
    out << "frequency_ghz,rate_mm_h,gamma_db_per_km\n";
    for (double rate : kFigureRainRates) {
        for (int f = 1; f <= 1000; ++f) {
            const double gamma =
                specific_rain_attenuation(FrequencyGhz(f), RainRate(rate),
                                          Polarization::Horizontal)
                    .db_per_km;
            out << f << ',' << num(rate) << ',' << num(gamma) << '\n';
        }
    }
}

void write_figure_4(std::ostream& out) {
    out << "frequency_ghz,sat_alt_km,elevation_deg,fspl_db,gas_db,total_db\n";
    for (double f : kFigure4FrequenciesGhz) {
        // Gas caps at the 100 km atmosphere top, so one integrator serves
        // every satellite altitude at this frequency.
        const SlantGasIntegrator integrator(FrequencyGhz(f), AtmosphereProfile::standard(),
                                            0.0, kAtmosphereTopKm);
        for (double alt_km : kFigure4AltitudesKm) {
            for (int i = 1; i <= 180; ++i) {
                const double elev = 0.5 * i;
                const double gas_db = integrator.attenuation_db(elev);
                const double distance_m = alt_km * 1e3 / std::sin(elev * std::numbers::pi / 180.0);
                const double fspl_db = fspl(FrequencyGhz(f), distance_m).value();
                out << num(f) << ',' << num(alt_km) << ',' << num(elev) << ','
                    << db_csv(fspl_db) << ',' << db_csv(gas_db) << ','
                    << db_csv(fspl_db + gas_db) << '\n';
            }
        }
    }
}

void write_figure_6(std::ostream& out) {
    out << "distance_m,fspl_db,gas_db,rain_db,total_db,rate_mm_h\n";
    std::vector<double> rates{0.0};
    rates.insert(rates.end(), kFigureRainRates.begin(), kFigureRainRates.end());
    for (double rate : rates) {
        for (double d : kFigure6DistancesM) {
            const PathLossBreakdown pl =
                total_terrestrial_loss(FrequencyGhz(140.0), d, RainRate(rate),
                                       AtmosphereProfile::standard(),
                                       Polarization::Horizontal);
            out << num(d) << ',' << db_csv(pl.fspl_db) << ',' << db_csv(pl.gas_db) << ','
                << db_csv(pl.rain_db) << ',' << db_csv(pl.total_db) << ',' << num(rate)
                << '\n';
        }
    }
}

// ---------------------------------------------------------------- commands

struct GasCmd {
    std::string freq;
    double altitude_km = 0.0;
    AtmosphereArgs atmosphere;

    void run(std::ostream& out) const {
        const AtmosphericState state = state_at(atmosphere.profile(), altitude_km);
        out << "frequency_ghz,gamma_db_per_km\n";
        for (double f : parse_values(freq)) {
            out << num(f) << ','
                << num(specific_gas_attenuation(FrequencyGhz(f), state).db_per_km) << '\n';
        }
    }
};

struct PeaksCmd {
    std::string freq; // lo:hi:step
    double altitude_km = 0.0;
    AtmosphereArgs atmosphere;

    void run(std::ostream& out) const {
        std::stringstream stream(freq);
        std::string lo, hi, step;
        if (!std::getline(stream, lo, ':') || !std::getline(stream, hi, ':')
            || !std::getline(stream, step) || step.find(':') != std::string::npos)
            throw UsageError("peaks expects --freq-ghz lo:hi:step");
        const AtmosphericState state = state_at(atmosphere.profile(), altitude_km);
        const auto peaks = find_absorption_peaks(
            FrequencyGhz(parse_double(lo, "--freq-ghz")),
            FrequencyGhz(parse_double(hi, "--freq-ghz")), state,
            parse_double(step, "--freq-ghz"));
        out << "peak_frequency_ghz\n";
        for (const FrequencyGhz& p : peaks)
            out << num(p.value) << '\n';
    }
};

struct RainCmd {
    std::string freq;
    std::string rates;
    std::string pol = "h";

    void run(std::ostream& out) const {
        const Polarization polarization = parse_polarization(pol);
        out << "frequency_ghz,rate_mm_h,gamma_db_per_km\n";
        for (double f : parse_values(freq)) {
            for (double r : parse_list(rates, "--rate-mm-h")) {
                const double gamma =
                    specific_rain_attenuation(FrequencyGhz(f), RainRate(r), polarization)
                        .db_per_km;
                out << num(f) << ',' << num(r) << ',' << num(gamma) << '\n';
            }
        }
    }
};

struct SlantCmd {
    std::string freq;
    std::string altitudes;
    std::string elevations;
    AtmosphereArgs atmosphere;

    void run(std::ostream& out) const {
        const AtmosphereProfile profile = atmosphere.profile();
        out << "frequency_ghz,sat_alt_km,elevation_deg,fspl_db,gas_db,rain_db,clutter_db,"
               "shadow_db,scintillation_db,total_db\n";
        for (double f : parse_values(freq)) {
            for (double alt_km : parse_list(altitudes, "--sat-alt-km")) {
                // gas stops at the platform when it flies inside the atmosphere
                const SlantGasIntegrator integrator(FrequencyGhz(f), profile, 0.0,
                                                    std::min(alt_km, kAtmosphereTopKm));
                for (double elev : parse_values(elevations)) {
                    const double gas_db = integrator.attenuation_db(elev);
                    const double distance_m = alt_km * 1e3 / std::sin(elev * std::numbers::pi / 180.0);
                    const double fspl_db = fspl(FrequencyGhz(f), distance_m).value();
                    const PathLossBreakdown pl =
                        PathLossBreakdown::assemble(fspl_db, gas_db, 0, 0, 0, 0);
                    out << num(f) << ',' << num(alt_km) << ',' << num(elev) << ',';
                    write_breakdown_row(out, pl);
                    out << '\n';
                }
            }
        }
    }
};

struct TerrestrialCmd {
    std::string freq;
    std::string distances;
    std::string rates = "0";
    std::string pol = "h";
    AtmosphereArgs atmosphere;

    void run(std::ostream& out) const {
        const AtmosphereProfile profile = atmosphere.profile();
        const Polarization polarization = parse_polarization(pol);
        out << "frequency_ghz,distance_m,rate_mm_h,fspl_db,gas_db,rain_db,clutter_db,"
               "shadow_db,scintillation_db,total_db\n";
        for (double f : parse_values(freq)) {
            for (double d : parse_list(distances, "--dist-m")) {
                for (double r : parse_list(rates, "--rate-mm-h")) {
                    const PathLossBreakdown pl = total_terrestrial_loss(
                        FrequencyGhz(f), d, RainRate(r), profile, polarization);
                    out << num(f) << ',' << num(d) << ',' << num(r) << ',';
                    write_breakdown_row(out, pl);
                    out << '\n';
                }
            }
        }
    }
};

struct NtnBudgetCmd {
    double freq_ghz = 0.0;
    double sat_alt_km = 0.0;
    double elev_deg = 0.0;
    double tx_power_dbm = 0.0;
    double tx_gain_dbi = 0.0;
    double rx_gain_dbi = 0.0;
    double shadow_db = 0.0;
    double clutter_db = 0.0;
    double scint_db = 0.0;
    double sf_sigma_db = -1.0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool los = false;
    double gas_override_db = -1.0;
    AtmosphereArgs atmosphere;

    void run(std::ostream& out) const {
        NtnLinkConfig cfg{FrequencyGhz(freq_ghz), sat_alt_km, elev_deg,  shadow_db,
                          clutter_db,             scint_db,   atmosphere.profile(),
                          {}};
        if (gas_override_db >= 0.0)
            cfg.gas_override_db = gas_override_db;
        if (sf_sigma_db >= 0.0) {
            if (!seed_given)
                throw UsageError("--sf-sigma-db requires an explicit --seed");
            // Negative draws clamp to 0: the loss ledger is non-negative.
            cfg.shadow_fading_db = std::max(0.0, draw_shadow_fading_db(sf_sigma_db, seed));
        }
        if (los)
            cfg = make_los(cfg);

        const PathLossBreakdown pl = ntn_path_loss(cfg);
        const TransmitterSpec tx{tx_power_dbm, tx_gain_dbi};
        const double rx_dbm = received_power(tx, pl, rx_gain_dbi).value();

        out << "NTN link budget\n";
        out << "  carrier frequency    " << num(freq_ghz) << " GHz\n";
        out << "  satellite altitude   " << num(sat_alt_km) << " km\n";
        out << "  elevation angle      " << num(elev_deg) << " deg\n";
        out << "  atmosphere           " << atmosphere.name << " ("
            << num(cfg.profile.surface_water_vapor_density_gm3) << " g/m3 surface vapor)\n";
        out << "  tx power             " << db_human(tx_power_dbm) << " dBm\n";
        out << "  tx antenna gain      " << db_human(tx_gain_dbi) << " dBi\n";
        out << "  rx antenna gain      " << db_human(rx_gain_dbi) << " dBi\n";
        out << "  fspl                 " << db_human(pl.fspl_db) << " dB\n";
        out << "  gas                  " << db_human(pl.gas_db)
            << (cfg.gas_override_db ? " dB (pinned)\n" : " dB\n");
        out << "  clutter              " << db_human(pl.clutter_db) << " dB\n";
        out << "  shadow fading        " << db_human(pl.shadow_db) << " dB\n";
        out << "  scintillation        " << db_human(pl.scintillation_db) << " dB\n";
        out << "  total path loss      " << db_human(pl.total_db) << " dB\n";
        out << "  received power       " << db_human(rx_dbm) << " dBm\n";
        out << '\n';
        out << "frequency_ghz,sat_alt_km,elevation_deg,fspl_db,gas_db,rain_db,clutter_db,"
               "shadow_db,scintillation_db,total_db,received_dbm\n";
        out << num(freq_ghz) << ',' << num(sat_alt_km) << ',' << num(elev_deg) << ',';
        write_breakdown_row(out, pl);
        out << ',' << db_csv(rx_dbm) << '\n';
    }
};

constexpr std::string_view kCoexistKeys[] = {
    "freq_ghz",          "sat_alt_km",        "sat_elev_deg",  "tx_power_dbm",
    "tx_gain_dbi",       "tx_hpbw_deg",       "sidelobe_floor_dbi", "pointing_elev_deg",
    "delta_t_kelvin",    "bandwidth_hz",      "margin_db",     "atmosphere",
    "surface_vapor_gm3", "gas_override_db"};

struct CoexistCmd {
    std::string config_path;

    void run(std::ostream& out) const {
        std::ifstream file(config_path);
        if (!file)
            throw std::domain_error("cannot open config file: " + config_path);
        const ScenarioConfig cfg = ScenarioConfig::parse(file, kCoexistKeys);

        for (const char* key : {"freq_ghz", "sat_alt_km", "sat_elev_deg", "tx_power_dbm",
                                "tx_gain_dbi", "delta_t_kelvin", "bandwidth_hz", "margin_db"}) {
            if (!cfg.has(key))
                throw std::domain_error(std::string("missing required config key: ") + key);
        }

        AtmosphereArgs atmosphere;
        atmosphere.name = cfg.text_or("atmosphere", "standard");
        atmosphere.surface_vapor_gm3 = cfg.number_or("surface_vapor_gm3", -1.0);

        const double sat_elev = cfg.number("sat_elev_deg");
        const double pointing_elev = cfg.number_or("pointing_elev_deg", sat_elev);
        NtnLinkConfig link{FrequencyGhz(cfg.number("freq_ghz")),
                           cfg.number("sat_alt_km"),
                           sat_elev,
                           0.0,
                           0.0,
                           0.0,
                           atmosphere.profile(),
                           {}};
        if (cfg.has("gas_override_db"))
            link.gas_override_db = cfg.number("gas_override_db");

        const AntennaPattern pattern{cfg.number("tx_gain_dbi"), cfg.number_or("tx_hpbw_deg", 8.0),
                                     cfg.number_or("sidelobe_floor_dbi", -10.0)};
        const RadiometerSpec radiometer{cfg.number("delta_t_kelvin"), cfg.number("bandwidth_hz"),
                                        cfg.number("margin_db")};

        const PathLossBreakdown pl = ntn_path_loss(link);
        const DecibelQuantity single = uplink_interference_at_satellite(
            cfg.number("tx_power_dbm"), pattern, pointing_elev, sat_elev, link);
        const DecibelQuantity threshold = interference_threshold(radiometer);
        const DeviceCapacity capacity = max_devices(single, threshold);
        const double margin_db = threshold.value() - single.value();

        out << "coexistence analysis\n";
        out << "  carrier frequency    " << num(link.carrier.value) << " GHz\n";
        out << "  satellite altitude   " << num(link.h_sat_km) << " km\n";
        out << "  satellite elevation  " << num(sat_elev) << " deg\n";
        out << "  pointing elevation   " << num(pointing_elev) << " deg\n";
        out << "  atmosphere           " << atmosphere.name << " ("
            << num(link.profile.surface_water_vapor_density_gm3) << " g/m3 surface vapor)\n";
        out << "  fspl                 " << db_human(pl.fspl_db) << " dB\n";
        out << "  gas                  " << db_human(pl.gas_db)
            << (link.gas_override_db ? " dB (pinned)\n" : " dB\n");
        out << "  total path loss      " << db_human(pl.total_db) << " dB\n";
        out << "  single-emitter level " << db_human(single.value()) << " dBm\n";
        out << "  threshold            " << db_human(threshold.value()) << " dBm\n";
        out << "  single-device margin " << db_human(margin_db) << " dB\n";
        if (capacity.single_device_exceeds) {
            out << "  max devices          0 (single device exceeds threshold)\n";
        } else {
            out << "  max devices          " << fmt("%.3g", capacity.count) << " (floor "
                << capacity.floor_count << ")\n";
        }
        out << '\n';
        out << "freq_ghz,sat_alt_km,sat_elev_deg,pointing_elev_deg,fspl_db,gas_db,total_db,"
               "single_dbm,threshold_dbm,single_device_margin_db,max_devices,"
               "max_devices_floor,single_device_exceeds\n";
        out << num(link.carrier.value) << ',' << num(link.h_sat_km) << ',' << num(sat_elev)
            << ',' << num(pointing_elev) << ',' << db_csv(pl.fspl_db) << ','
            << db_csv(pl.gas_db) << ',' << db_csv(pl.total_db) << ','
            << db_csv(single.value()) << ',' << db_csv(threshold.value()) << ','
            << db_csv(margin_db) << ',' << fmt("%.6g", capacity.count) << ','
            << capacity.floor_count << ',' << (capacity.single_device_exceeds ? 1 : 0)
            << '\n';
    }
};

struct FitCmd {
    std::string input_path;

    static constexpr const char* kHeader =
        "distance_m,tx_power_dbm,tx_gain_dbi,rx_gain_dbi,rx_power_dbm,frequency_ghz";

    void run(std::ostream& out) const {
        std::ifstream file(input_path);
        if (!file)
            throw std::domain_error("cannot open input file: " + input_path);
        std::string line;
        if (!std::getline(file, line) || trim(line) != kHeader)
            throw std::domain_error(std::string("input header must be exactly: ") + kHeader);

        std::vector<MeasurementRecord> records;
        std::size_t line_no = 1;
        while (std::getline(file, line)) {
            ++line_no;
            if (trim(line).empty())
                continue;
            std::stringstream row(line);
            std::string field;
            std::vector<double> v;
            while (std::getline(row, field, ','))
                v.push_back(parse_double(trim(field), "record on line " + std::to_string(line_no)));
            if (v.size() != 6)
                throw std::domain_error("line " + std::to_string(line_no)
                                        + ": expected 6 fields");
            records.push_back({v[0], v[1], v[2], v[3], v[4], FrequencyGhz(v[5])});
        }

        const ExcessLossFit fit = fit_excess_loss(records);
        out << "excess-loss fit\n";
        out << "  records              " << fit.n_records << '\n';
        out << "  mean excess          " << db_human(fit.mean_excess_db) << " dB\n";
        out << "  std deviation        " << db_human(fit.std_dev_db) << " dB\n";
        out << '\n';
        out << "mean_excess_db,std_dev_db,n_records\n";
        out << db_csv(fit.mean_excess_db) << ',' << db_csv(fit.std_dev_db) << ','
            << fit.n_records << '\n';
    }
};

void add_atmosphere_options(CLI::App* cmd, AtmosphereArgs& args) {
    cmd->add_option("--atmosphere", args.name, "atmosphere preset: standard or dry")
        ->check(CLI::IsMember({"standard", "dry"}));
    cmd->add_option("--surface-vapor", args.surface_vapor_gm3,
                    "surface water-vapor density in g/m3 (overrides the preset)");
}

} // namespace

ScenarioConfig ScenarioConfig::parse(std::istream& in,
                                     std::span<const std::string_view> allowed_keys) {
    ScenarioConfig cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::domain_error("config line " + std::to_string(line_no)
                                    + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::domain_error("config line " + std::to_string(line_no)
                                    + ": empty key or value");
        bool known = false;
        for (std::string_view allowed : allowed_keys)
            known = known || allowed == key;
        if (!known)
            throw std::domain_error("config line " + std::to_string(line_no) + ": unknown key '"
                                    + key + "'");
        if (!cfg.values_.emplace(key, value).second)
            throw std::domain_error("config line " + std::to_string(line_no)
                                    + ": duplicate key '" + key + "'");
    }
    return cfg;
}

bool ScenarioConfig::has(const std::string& key) const { return values_.count(key) != 0; }

double ScenarioConfig::number(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end())
        throw std::domain_error("missing config key: " + key);
    try {
        std::size_t used = 0;
        const double v = std::stod(it->second, &used);
        if (used != it->second.size() || !std::isfinite(v))
            throw std::invalid_argument(it->second);
        return v;
    } catch (const std::exception&) {
        throw std::domain_error("config key '" + key + "' is not a number: " + it->second);
    }
}

double ScenarioConfig::number_or(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
}

std::string ScenarioConfig::text_or(const std::string& key, std::string fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

SweepSpec::SweepSpec(double start_, double stop_, double step_)
    : start(start_), stop(stop_), step(step_) {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step))
        throw std::domain_error("sweep bounds must be finite");
    if (step <= 0.0)
        throw std::domain_error("sweep step must be positive");
    if (start > stop)
        throw std::domain_error("sweep start must not exceed stop");
    if ((stop - start) / step > 1e7)
        throw std::domain_error("sweep exceeds 1e7 points");
}

std::vector<double> SweepSpec::values() const {
    std::vector<double> out;
    for (std::int64_t i = 0;; ++i) {
        const double v = start + static_cast<double>(i) * step;
        if (v > stop + 0.5 * step)
            break;
        out.push_back(v);
    }
    return out;
}

std::vector<double> parse_values(const std::string& text) {
    if (text.find(':') == std::string::npos)
        return {parse_double(text, "value")};
    std::stringstream stream(text);
    std::string start, stop, step;
    if (!std::getline(stream, start, ':') || !std::getline(stream, stop, ':')
        || !std::getline(stream, step) || step.find(':') != std::string::npos)
        throw UsageError("sweep must have the form start:stop:step");
    try {
        return SweepSpec(parse_double(start, "sweep start"), parse_double(stop, "sweep stop"),
                         parse_double(step, "sweep step"))
            .values();
    } catch (const std::domain_error& e) {
        throw UsageError(e.what()); // malformed sweeps are argv mistakes
    }
}

void write_figure(int figure_number, std::ostream& out) {
    switch (figure_number) {
    case 2: write_figure_2(out); return;
    case 3: write_figure_3(out); return;
    case 4: write_figure_4(out); return;
    case 6: write_figure_6(out); return;
    default:
        throw UsageError("figure must be one of 2, 3, 4, 6");
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"propagation and spectrum-coexistence engine for bands above 100 GHz"};
    app.require_subcommand(1);
    std::string out_path;

    GasCmd gas_cmd;
    auto* gas = app.add_subcommand("gas", "gaseous specific attenuation (dB/km)");
    gas->add_option("--freq-ghz", gas_cmd.freq, "frequency in GHz, or sweep start:stop:step")
        ->required();
    gas->add_option("--altitude-km", gas_cmd.altitude_km, "evaluation altitude in km");
    add_atmosphere_options(gas, gas_cmd.atmosphere);

    PeaksCmd peaks_cmd;
    auto* peaks = app.add_subcommand("peaks", "absorption peak frequencies");
    peaks->add_option("--freq-ghz", peaks_cmd.freq, "search grid as start:stop:step")
        ->required();
    peaks->add_option("--altitude-km", peaks_cmd.altitude_km, "evaluation altitude in km");
    add_atmosphere_options(peaks, peaks_cmd.atmosphere);

    RainCmd rain_cmd;
    auto* rain = app.add_subcommand("rain", "specific rain attenuation (dB/km)");
    rain->add_option("--freq-ghz", rain_cmd.freq, "frequency in GHz, or sweep start:stop:step")
        ->required();
    rain->add_option("--rate-mm-h", rain_cmd.rates, "comma-separated rain rates in mm/h")
        ->required();
    rain->add_option("--pol", rain_cmd.pol, "polarization: h, v or c")
        ->check(CLI::IsMember({"h", "v", "c"}));

    SlantCmd slant_cmd;
    auto* slant = app.add_subcommand("slant", "earth-to-space total path loss");
    slant->add_option("--freq-ghz", slant_cmd.freq, "frequency in GHz, or sweep")->required();
    slant->add_option("--sat-alt-km", slant_cmd.altitudes, "comma-separated satellite altitudes")
        ->required();
    slant->add_option("--elev-deg", slant_cmd.elevations, "elevation in degrees, or sweep")
        ->required();
    add_atmosphere_options(slant, slant_cmd.atmosphere);

    TerrestrialCmd terr_cmd;
    auto* terr = app.add_subcommand("terrestrial", "terrestrial total path loss");
    terr->add_option("--freq-ghz", terr_cmd.freq, "frequency in GHz, or sweep")->required();
    terr->add_option("--dist-m", terr_cmd.distances, "comma-separated distances in m")
        ->required();
    terr->add_option("--rate-mm-h", terr_cmd.rates, "comma-separated rain rates in mm/h");
    terr->add_option("--pol", terr_cmd.pol, "polarization: h, v or c")
        ->check(CLI::IsMember({"h", "v", "c"}));
    add_atmosphere_options(terr, terr_cmd.atmosphere);

    NtnBudgetCmd ntn_cmd;
    auto* ntn = app.add_subcommand("ntn-budget", "non-terrestrial link budget");
    ntn->add_option("--freq-ghz", ntn_cmd.freq_ghz, "carrier frequency in GHz")->required();
    ntn->add_option("--sat-alt-km", ntn_cmd.sat_alt_km, "satellite altitude in km")->required();
    ntn->add_option("--elev-deg", ntn_cmd.elev_deg, "elevation angle in degrees")->required();
    ntn->add_option("--tx-power-dbm", ntn_cmd.tx_power_dbm, "transmit power in dBm")->required();
    ntn->add_option("--tx-gain-dbi", ntn_cmd.tx_gain_dbi, "transmit antenna gain")->required();
    ntn->add_option("--rx-gain-dbi", ntn_cmd.rx_gain_dbi, "receive antenna gain (default 0)");
    ntn->add_option("--shadow-db", ntn_cmd.shadow_db, "shadow fading SF in dB");
    ntn->add_option("--clutter-db", ntn_cmd.clutter_db, "clutter loss CL in dB");
    ntn->add_option("--scint-db", ntn_cmd.scint_db, "scintillation PL_s in dB");
    ntn->add_option("--sf-sigma-db", ntn_cmd.sf_sigma_db,
                    "draw SF from a log-normal with this sigma (needs --seed)");
    ntn->add_option("--seed", ntn_cmd.seed, "RNG seed for the SF draw");
    ntn->add_flag("--los", ntn_cmd.los, "line-of-sight scenario: clutter loss forced to 0");
    ntn->add_option("--gas-override-db", ntn_cmd.gas_override_db,
                    "pin the gas term to this value instead of the layered integral");
    add_atmosphere_options(ntn, ntn_cmd.atmosphere);

    CoexistCmd coexist_cmd;
    auto* coexist = app.add_subcommand("coexist", "satellite-radiometer interference analysis");
    coexist->add_option("--config", coexist_cmd.config_path, "scenario config file")->required();

    FitCmd fit_cmd;
    auto* fit = app.add_subcommand("fit", "excess-loss fit over measurement records");
    fit->add_option("--input", fit_cmd.input_path, "input CSV of measurement records")
        ->required();

    int figure_number = 0;
    auto* figure = app.add_subcommand("figure", "emit the dataset behind a reproduced figure");
    figure->add_option("n", figure_number, "figure number: 2, 3, 4 or 6")->required();

    for (CLI::App* cmd : {gas, peaks, rain, slant, terr, ntn, coexist, fit, figure})
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
    ntn_cmd.seed_given = ntn->count("--seed") > 0;

    try {
        // Build the whole result first so a failing command emits nothing.
        std::ostringstream buffer;
        if (app.got_subcommand(gas)) gas_cmd.run(buffer);
        else if (app.got_subcommand(peaks)) peaks_cmd.run(buffer);
        else if (app.got_subcommand(rain)) rain_cmd.run(buffer);
        else if (app.got_subcommand(slant)) slant_cmd.run(buffer);
        else if (app.got_subcommand(terr)) terr_cmd.run(buffer);
        else if (app.got_subcommand(ntn)) ntn_cmd.run(buffer);
        else if (app.got_subcommand(coexist)) coexist_cmd.run(buffer);
        else if (app.got_subcommand(fit)) fit_cmd.run(buffer);
        else if (app.got_subcommand(figure)) write_figure(figure_number, buffer);

        if (!out_path.empty()) {
            std::ofstream file(out_path);
            if (!file)
                throw std::domain_error("cannot open output file: " + out_path);
            file << buffer.str();
        } else {
            out << buffer.str();
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace thzprop::cli
