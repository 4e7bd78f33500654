#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "heider/sweep.hpp"

namespace heider {

/// Effective run configuration: the grid, the Monte Carlo budget, the
/// dynamics controls and the output location. Representable both as CLI
/// flags and as a flat key=value configuration file; flags override file
/// values, the file overrides the defaults below.
struct RunConfig {
    std::vector<double> beta1_values = default_beta_grid();
    std::vector<double> beta2_values = default_beta_grid();
    std::vector<int> sizes = {4, 6, 9};
    int trials = 200;
    std::uint64_t seed = 42;
    double dt = 0.01;
    double t_max = 100.0;
    double saturation_floor = 0.99;
    int stationarity_window = 3;
    bool normalize_triadic_sum = true;
    std::string out_dir = ".";

    static std::vector<double> default_beta_grid();  // 0, 0.25, ..., 2.0

    bool operator==(const RunConfig&) const = default;
};

/// Re-validate every numeric constraint; throws ConfigError naming the
/// offending key (e.g. "dt must be > 0").
void validate(const RunConfig& config);

// Configuration file: one "key = value" entry per line, '#' starts a
// comment, blank lines ignored. Keys match the CLI flag names with
// underscores (beta1, beta2, sizes, trials, seed, dt, t_max,
// saturation_floor, stationarity_window, normalize_triadic_sum, out).
// Unknown keys are rejected.
void apply_config_file(RunConfig& config, std::istream& in,
                       const std::string& source = "<config>");
void apply_config_file(RunConfig& config, const std::string& path);

/// The effective configuration as config-file text; parsing it back yields
/// an equivalent RunConfig (the --print-config round trip).
std::string config_text(const RunConfig& config);

GridSpec to_grid_spec(const RunConfig& config);

// Value-list syntax shared by flags and file values: either a comma list
// "0,0.5,1" or an inclusive range "lo:step:hi".
std::vector<double> parse_real_list(const std::string& text, const std::string& key);
std::vector<int> parse_int_list(const std::string& text, const std::string& key);
bool parse_bool(const std::string& text, const std::string& key);
std::uint64_t parse_u64(const std::string& text, const std::string& key);

}  // namespace heider
