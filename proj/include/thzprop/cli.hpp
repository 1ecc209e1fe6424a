// SPDX-License-Identifier: Apache-2.0
//
// thzprop: propagation and spectrum-coexistence engine for bands above 100 GHz.

#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thzprop::cli {

/// Flat `key = value` scenario file. Parsing is fail-closed: keys outside
/// the allowed set and duplicate keys are errors, because a silently ignored
/// typo in a physical parameter is the costliest failure mode.
class ScenarioConfig {
  public:
    static ScenarioConfig parse(std::istream& in,
                                std::span<const std::string_view> allowed_keys);

    bool has(const std::string& key) const;
    double number(const std::string& key) const;
    double number_or(const std::string& key, double fallback) const;
    std::string text_or(const std::string& key, std::string fallback) const;

  private:
    std::map<std::string, std::string> values_;
};

/// Inclusive numeric sweep start:stop:step; endpoints included when within
/// half a step. Sweep size is capped at 1e7 points.
struct SweepSpec {
    double start;
    double stop;
    double step;
    SweepSpec(double start, double stop, double step);
    std::vector<double> values() const;
};

/// Parse "v" into a single value or "start:stop:step" into a sweep.
std::vector<double> parse_values(const std::string& text);

/// Emit the dataset behind one of the reproduced figures (2, 3, 4 or 6)
/// as CSV. Deterministic, byte-identical across runs.
void write_figure(int figure_number, std::ostream& out);

/// Subcommand front end. Returns 0 on success, 1 on domain errors,
/// 2 on usage errors. CSV goes to `out` (or --out <file>), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace thzprop::cli
