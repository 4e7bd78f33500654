#include "heider/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "heider/errors.hpp"
#include "heider/results_csv.hpp"

namespace heider {

std::vector<double> RunConfig::default_beta_grid() {
    std::vector<double> betas;
    for (int i = 0; i <= 8; ++i) betas.push_back(0.25 * i);
    return betas;
}

namespace {

[[noreturn]] void bad_value(const std::string& key, const std::string& text,
                            const std::string& why) {
    throw ConfigError(key + ": " + why + " (got \"" + text + "\")");
}

double parse_real(const std::string& text, const std::string& key) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v))
        bad_value(key, text, "expected a finite real");
    return v;
}

long parse_long(const std::string& text, const std::string& key) {
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(text.c_str(), &end, 10);
    if (end == text.c_str() || *end != '\0' || errno == ERANGE)
        bad_value(key, text, "expected an integer");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep)) parts.push_back(part);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

std::string strip(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

}  // namespace

std::vector<double> parse_real_list(const std::string& text, const std::string& key) {
    std::vector<double> values;
    if (text.find(':') != std::string::npos) {
        // Inclusive range lo:step:hi.
        const auto parts = split(text, ':');
        if (parts.size() != 3) bad_value(key, text, "range must be lo:step:hi");
        const double lo = parse_real(strip(parts[0]), key);
        const double step = parse_real(strip(parts[1]), key);
        const double hi = parse_real(strip(parts[2]), key);
        if (!(step > 0.0)) bad_value(key, text, "range step must be > 0");
        if (hi < lo) bad_value(key, text, "range end must be >= start");
        // Half-step slack keeps the endpoint in despite rounding.
        for (int i = 0; lo + i * step <= hi + step * 0.5; ++i) values.push_back(lo + i * step);
        return values;
    }
    for (const std::string& part : split(text, ',')) {
        const std::string item = strip(part);
        if (item.empty()) bad_value(key, text, "empty list item");
        values.push_back(parse_real(item, key));
    }
    if (values.empty()) bad_value(key, text, "expected a non-empty list");
    return values;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& key) {
    std::vector<int> values;
    for (const std::string& part : split(text, ',')) {
        const std::string item = strip(part);
        if (item.empty()) bad_value(key, text, "empty list item");
        values.push_back(static_cast<int>(parse_long(item, key)));
    }
    if (values.empty()) bad_value(key, text, "expected a non-empty list");
    return values;
}

bool parse_bool(const std::string& text, const std::string& key) {
    if (text == "true" || text == "1" || text == "on" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "off" || text == "no") return false;
    bad_value(key, text, "expected a boolean (true/false/1/0/on/off/yes/no)");
}

std::uint64_t parse_u64(const std::string& text, const std::string& key) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(text.c_str(), &end, 10);
    if (end == text.c_str() || *end != '\0' || errno == ERANGE || text.find('-') == 0)
        bad_value(key, text, "expected an unsigned 64-bit integer");
    return v;
}

void validate(const RunConfig& config) {
    auto check_betas = [](const std::vector<double>& betas, const char* key) {
        if (betas.empty()) throw ConfigError(std::string(key) + " must be non-empty");
        for (std::size_t i = 0; i < betas.size(); ++i) {
            if (!std::isfinite(betas[i]))
                throw ConfigError(std::string(key) + " values must be finite");
            if (i > 0 && !(betas[i] > betas[i - 1]))
                throw ConfigError(std::string(key) + " must be strictly ascending");
        }
    };
    check_betas(config.beta1_values, "beta1");
    check_betas(config.beta2_values, "beta2");
    if (config.sizes.empty()) throw ConfigError("sizes must be non-empty");
    for (std::size_t i = 0; i < config.sizes.size(); ++i) {
        if (config.sizes[i] < 3) throw ConfigError("sizes must be >= 3");
        if (i > 0 && config.sizes[i] <= config.sizes[i - 1])
            throw ConfigError("sizes must be strictly ascending");
    }
    if (config.trials < 1) throw ConfigError("trials must be >= 1");
    if (!(config.dt > 0.0)) throw ConfigError("dt must be > 0");
    if (!(config.t_max >= config.dt)) throw ConfigError("t_max must be >= dt");
    if (!(config.saturation_floor > 0.0 && config.saturation_floor < 1.0))
        throw ConfigError("saturation_floor must lie in (0, 1)");
    if (config.stationarity_window < 1) throw ConfigError("stationarity_window must be >= 1");
    if (config.out_dir.empty()) throw ConfigError("out must be non-empty");
}

void apply_config_file(RunConfig& config, std::istream& in, const std::string& source) {
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string entry = strip(line);
        if (entry.empty()) continue;
        const auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw ConfigError(source + ":" + std::to_string(line_no) +
                              ": expected \"key = value\", got \"" + entry + "\"");
        const std::string key = strip(entry.substr(0, eq));
        const std::string value = strip(entry.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError(source + ":" + std::to_string(line_no) + ": empty key or value");

        if (key == "beta1")
            config.beta1_values = parse_real_list(value, key);
        else if (key == "beta2")
            config.beta2_values = parse_real_list(value, key);
        else if (key == "sizes")
            config.sizes = parse_int_list(value, key);
        else if (key == "trials")
            config.trials = static_cast<int>(parse_long(value, key));
        else if (key == "seed")
            config.seed = parse_u64(value, key);
        else if (key == "dt")
            config.dt = parse_real(value, key);
        else if (key == "t_max")
            config.t_max = parse_real(value, key);
        else if (key == "saturation_floor")
            config.saturation_floor = parse_real(value, key);
        else if (key == "stationarity_window")
            config.stationarity_window = static_cast<int>(parse_long(value, key));
        else if (key == "normalize_triadic_sum")
            config.normalize_triadic_sum = parse_bool(value, key);
        else if (key == "out")
            config.out_dir = value;
        else
            throw ConfigError(source + ":" + std::to_string(line_no) + ": unknown key \"" + key +
                              "\"");
    }
}

void apply_config_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    apply_config_file(config, in, path);
}

namespace {

std::string join_g6(const std::vector<double>& values) {
    std::string out;
    for (double v : values) {
        if (!out.empty()) out += ',';
        out += format_g6(v);
    }
    return out;
}

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (int v : values) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

}  // namespace

std::string config_text(const RunConfig& config) {
    std::ostringstream out;
    out << "beta1 = " << join_g6(config.beta1_values) << '\n';
    out << "beta2 = " << join_g6(config.beta2_values) << '\n';
    out << "sizes = " << join_ints(config.sizes) << '\n';
    out << "trials = " << config.trials << '\n';
    out << "seed = " << config.seed << '\n';
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", config.dt);
    out << "dt = " << buf << '\n';
    std::snprintf(buf, sizeof buf, "%.17g", config.t_max);
    out << "t_max = " << buf << '\n';
    std::snprintf(buf, sizeof buf, "%.17g", config.saturation_floor);
    out << "saturation_floor = " << buf << '\n';
    out << "stationarity_window = " << config.stationarity_window << '\n';
    out << "normalize_triadic_sum = " << (config.normalize_triadic_sum ? "true" : "false")
        << '\n';
    out << "out = " << config.out_dir << '\n';
    return out.str();
}

GridSpec to_grid_spec(const RunConfig& config) {
    validate(config);
    GridSpec spec;
    spec.beta1_values = config.beta1_values;
    spec.beta2_values = config.beta2_values;
    spec.sizes = config.sizes;
    spec.trials_per_cell = config.trials;
    spec.master_seed = config.seed;
    spec.dynamics.n = config.sizes.front();
    spec.dynamics.dt = config.dt;
    spec.dynamics.t_max = config.t_max;
    spec.dynamics.saturation_floor = config.saturation_floor;
    spec.dynamics.stationarity_window = config.stationarity_window;
    spec.dynamics.normalize_triadic_sum = config.normalize_triadic_sum;
    return spec;
}

}  // namespace heider
