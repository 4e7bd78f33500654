#include "cli_app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <string>

#include "heider/balance.hpp"
#include "heider/config.hpp"
#include "heider/dynamics.hpp"
#include "heider/errors.hpp"
#include "heider/heatmap.hpp"
#include "heider/results_csv.hpp"
#include "heider/sweep.hpp"

namespace heider::cli {

namespace {

// One string slot per flag; values only reach RunConfig when the flag was
// actually given, so precedence is defaults < config file < flags.
struct Flags {
    std::string config_path;
    std::string beta1, beta2, sizes;
    std::string seed, trials, dt, t_max, saturation_floor, stationarity_window, normalize;
    std::string out;
    bool print_config = false;
};

void add_config_flags(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--config", flags.config_path, "Configuration file (key = value lines)");
    cmd->add_option("--seed", flags.seed, "Master seed (unsigned 64-bit)");
    cmd->add_option("--trials", flags.trials, "Trials per grid cell");
    cmd->add_option("--beta1", flags.beta1, "beta1 values: list \"0,0.5,1\" or range \"0:0.25:2\"");
    cmd->add_option("--beta2", flags.beta2, "beta2 values: list or range");
    cmd->add_option("--sizes", flags.sizes, "Network sizes, comma list");
    cmd->add_option("--dt", flags.dt, "Integration step");
    cmd->add_option("--t-max", flags.t_max, "Maximum model time per trial");
    cmd->add_option("--saturation-floor", flags.saturation_floor,
                    "Minimum |w| for a link to count as locked");
    cmd->add_option("--stationarity-window", flags.stationarity_window,
                    "Consecutive stable checks required for classification");
    cmd->add_option("--normalize-triadic-sum", flags.normalize,
                    "Divide the triadic sum by (n-2): true/false");
    cmd->add_option("--out", flags.out, "Output directory");
    cmd->add_flag("--print-config", flags.print_config,
                  "Print the effective configuration and exit");
}

RunConfig build_config(const CLI::App* cmd, const Flags& flags) {
    RunConfig config;
    if (cmd->count("--config")) apply_config_file(config, flags.config_path);
    if (cmd->count("--beta1")) config.beta1_values = parse_real_list(flags.beta1, "beta1");
    if (cmd->count("--beta2")) config.beta2_values = parse_real_list(flags.beta2, "beta2");
    if (cmd->count("--sizes")) config.sizes = parse_int_list(flags.sizes, "sizes");
    if (cmd->count("--trials")) config.trials = static_cast<int>(parse_u64(flags.trials, "trials"));
    if (cmd->count("--seed")) config.seed = parse_u64(flags.seed, "seed");
    if (cmd->count("--dt")) config.dt = parse_real_list(flags.dt, "dt").at(0);
    if (cmd->count("--t-max")) config.t_max = parse_real_list(flags.t_max, "t_max").at(0);
    if (cmd->count("--saturation-floor"))
        config.saturation_floor = parse_real_list(flags.saturation_floor, "saturation_floor").at(0);
    if (cmd->count("--stationarity-window"))
        config.stationarity_window =
            static_cast<int>(parse_u64(flags.stationarity_window, "stationarity_window"));
    if (cmd->count("--normalize-triadic-sum"))
        config.normalize_triadic_sum = parse_bool(flags.normalize, "normalize_triadic_sum");
    if (cmd->count("--out")) config.out_dir = flags.out;
    validate(config);
    return config;
}

std::string bool_text(bool v) { return v ? "true" : "false"; }

std::string fraction_text(const std::optional<double>& fraction) {
    return fraction ? format_g6(*fraction) : "indeterminate";
}

std::string node_flags_text(const std::vector<bool>& nodes) {
    std::string out;
    for (bool b : nodes) {
        if (!out.empty()) out += ',';
        out += b ? '1' : '0';
    }
    return out;
}

int cmd_trial(const CLI::App* cmd, const Flags& flags) {
    RunConfig config = build_config(cmd, flags);
    if (flags.print_config) {
        std::cout << config_text(config);
        return kExitOk;
    }
    if (config.sizes.size() != 1)
        throw ConfigError("trial: sizes must be a single value, got " +
                          std::to_string(config.sizes.size()));
    if (config.beta1_values.size() != 1 || config.beta2_values.size() != 1)
        throw ConfigError("trial: beta1 and beta2 must be single values");

    DynamicsConfig dynamics;
    dynamics.n = config.sizes.front();
    dynamics.dt = config.dt;
    dynamics.t_max = config.t_max;
    dynamics.saturation_floor = config.saturation_floor;
    dynamics.stationarity_window = config.stationarity_window;
    dynamics.normalize_triadic_sum = config.normalize_triadic_sum;
    const CouplingParams params{config.beta1_values.front(), config.beta2_values.front()};

    const TrialOutcome outcome = run_trial(params, dynamics, config.seed);
    const BalanceReport& report = outcome.report;
    std::cout << "status = " << to_string(outcome.status) << '\n';
    std::cout << "t_final = " << format_g6(outcome.t_final) << '\n';
    std::cout << "n = " << dynamics.n << '\n';
    std::cout << "beta1 = " << format_g6(params.beta1) << '\n';
    std::cout << "beta2 = " << format_g6(params.beta2) << '\n';
    std::cout << "seed = " << config.seed << '\n';
    std::cout << "multiplex_balanced = " << bool_text(report.multiplex_balanced) << '\n';
    std::cout << "layer1_balanced = " << bool_text(report.layer_balanced[0]) << '\n';
    std::cout << "layer2_balanced = " << bool_text(report.layer_balanced[1]) << '\n';
    std::cout << "layers_sign_identical = " << bool_text(report.layers_sign_identical) << '\n';
    std::cout << "triad_fraction_layer1 = " << fraction_text(report.triad_fraction[0]) << '\n';
    std::cout << "triad_fraction_layer2 = " << fraction_text(report.triad_fraction[1]) << '\n';
    std::cout << "node_balanced_layer1 = " << node_flags_text(report.node_balanced[0]) << '\n';
    std::cout << "node_balanced_layer2 = " << node_flags_text(report.node_balanced[1]) << '\n';
    return kExitOk;
}

int cmd_sweep(const CLI::App* cmd, const Flags& flags, bool heatmaps) {
    RunConfig config = build_config(cmd, flags);
    if (flags.print_config) {
        std::cout << config_text(config);
        return kExitOk;
    }
    const GridSpec spec = to_grid_spec(config);

    const auto started = std::chrono::steady_clock::now();
    const std::vector<CellEstimate> cells = sweep(spec);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    std::filesystem::create_directories(config.out_dir);
    const std::string csv_path = config.out_dir + "/results.csv";
    write_results_csv(csv_path, cells);

    long failures = 0;
    for (const CellEstimate& c : cells) failures += c.failures;
    for (int n : spec.sizes) {
        double sum = 0.0;
        long count = 0;
        for (const CellEstimate& c : cells)
            if (c.n == n) {
                sum += c.p_hb;
                ++count;
            }
        std::cout << "n = " << n << ": mean p_hb = " << format_g6(sum / count) << " over "
                  << count << " cells\n";
    }
    std::cout << "wrote " << csv_path << " (" << cells.size() << " cells, "
              << format_g6(seconds) << " s)\n";

    if (heatmaps) {
        for (int n : spec.sizes) {
            const std::string stem = config.out_dir + "/phb_n" + std::to_string(n);
            write_heatmap_files(cells, n, stem);
            std::cout << "wrote " << stem << ".pgm and " << stem << ".svg\n";
        }
    }
    if (failures > 0) {
        std::cerr << "warning: " << failures
                  << " trial(s) ended in numerical failure (counted as undecided)\n";
        return kExitNumerical;
    }
    return kExitOk;
}

int cmd_render(const std::string& in_csv, const std::string& out_dir) {
    const std::vector<CellEstimate> cells = read_results_csv(in_csv);
    std::set<int> sizes;
    for (const CellEstimate& c : cells) sizes.insert(c.n);
    if (sizes.empty()) throw UsageError("render: no cells in " + in_csv);
    std::filesystem::create_directories(out_dir);
    for (int n : sizes) {
        const std::string stem = out_dir + "/phb_n" + std::to_string(n);
        write_heatmap_files(cells, n, stem);
        std::cout << "wrote " << stem << ".pgm and " << stem << ".svg\n";
    }
    return kExitOk;
}

int cmd_oracle(int n) {
    const std::uint64_t balanced = enumerate_balanced_configs(n);
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    const std::uint64_t expected = std::uint64_t{1} << (n - 1);
    const bool pass = balanced == expected;
    std::cout << total << " total, " << balanced << " balanced, " << (pass ? "PASS" : "FAIL")
              << '\n';
    return pass ? kExitOk : kExitOracleFail;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Heider balance dynamics on bilayer multiplex networks"};
    app.require_subcommand(1);
    app.footer("Exit codes: 0 ok, 1 I/O or internal error, 2 config/usage error, "
               "3 numerical failure, 4 oracle FAIL.\n"
               "HEIDER_WORKERS sets the sweep worker count; it never changes results.");

    Flags trial_flags;
    CLI::App* trial = app.add_subcommand(
        "trial", "Run one trajectory and print its outcome as key = value lines");
    add_config_flags(trial, trial_flags);

    Flags sweep_flags;
    bool heatmaps = false;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Monte Carlo P_HB estimate over the (beta1, beta2) grid");
    add_config_flags(sweep_cmd, sweep_flags);
    sweep_cmd->add_flag("--heatmaps", heatmaps, "Also render PGM/SVG heatmaps per size");

    std::string render_in, render_out = ".";
    CLI::App* render = app.add_subcommand("render", "Render heatmaps from a results CSV");
    render->add_option("--in", render_in, "Input results.csv")->required();
    render->add_option("--out", render_out, "Output directory");

    int oracle_n = 0;
    CLI::App* oracle = app.add_subcommand(
        "oracle", "Exhaustive balance-count self-test on K_n (3 <= n <= 6)");
    oracle->add_option("n", oracle_n, "Node count")->required();

    try {
        app.parse(argc, argv);
        if (trial->parsed()) return cmd_trial(trial, trial_flags);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_cmd, sweep_flags, heatmaps);
        if (render->parsed()) return cmd_render(render_in, render_out);
        if (oracle->parsed()) return cmd_oracle(oracle_n);
        return kExitConfig;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
}

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("heider");
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace heider::cli
