#include "heider/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "heider/errors.hpp"

namespace heider {

namespace {

void require_ascending(const std::vector<double>& values, const char* name) {
    if (values.empty()) throw UsageError(std::string("GridSpec: ") + name + " must be non-empty");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]))
            throw UsageError(std::string("GridSpec: ") + name + " must be finite");
        if (i > 0 && !(values[i] > values[i - 1]))
            throw UsageError(std::string("GridSpec: ") + name + " must be strictly ascending");
    }
}

std::size_t index_of(const std::vector<double>& values, double v, const char* name) {
    auto it = std::find(values.begin(), values.end(), v);
    if (it == values.end())
        throw UsageError(std::string("estimate_cell: ") + name + " = " + std::to_string(v) +
                         " is not a grid value");
    return static_cast<std::size_t>(it - values.begin());
}

}  // namespace

void GridSpec::validate() const {
    require_ascending(beta1_values, "beta1_values");
    require_ascending(beta2_values, "beta2_values");
    if (sizes.empty()) throw UsageError("GridSpec: sizes must be non-empty");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 3) throw UsageError("GridSpec: sizes must be >= 3");
        if (i > 0 && sizes[i] <= sizes[i - 1])
            throw UsageError("GridSpec: sizes must be strictly ascending");
    }
    if (trials_per_cell < 1) throw UsageError("GridSpec: trials_per_cell must be >= 1");
    DynamicsConfig cfg = dynamics;
    cfg.n = sizes.front();
    cfg.validate();
}

double binomial_std_err(double p, int trials) {
    if (trials < 1) throw UsageError("binomial_std_err: trials must be >= 1");
    return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

std::size_t cell_linear_index(const GridSpec& spec, std::size_t size_idx, std::size_t beta1_idx,
                              std::size_t beta2_idx) {
    return (size_idx * spec.beta1_values.size() + beta1_idx) * spec.beta2_values.size() +
           beta2_idx;
}

namespace {

CellEstimate estimate_cell_at(const GridSpec& spec, std::size_t size_idx, std::size_t beta1_idx,
                              std::size_t beta2_idx, int trials) {
    CellEstimate cell;
    cell.beta1 = spec.beta1_values[beta1_idx];
    cell.beta2 = spec.beta2_values[beta2_idx];
    cell.n = spec.sizes[size_idx];
    cell.trials = trials;

    const CouplingParams params{cell.beta1, cell.beta2};
    DynamicsConfig cfg = spec.dynamics;
    cfg.n = cell.n;
    cfg.validate();

    const std::uint64_t cell_index = cell_linear_index(spec, size_idx, beta1_idx, beta2_idx);
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t seed =
            derive_trial_seed(spec.master_seed, cell_index, static_cast<std::uint64_t>(t));
        try {
            switch (run_trial(params, cfg, seed).status) {
                case TrialStatus::Balanced: ++cell.balanced; break;
                case TrialStatus::Jammed: ++cell.jammed; break;
                case TrialStatus::Undecided: ++cell.undecided; break;
            }
        } catch (const NumericalError&) {
            // A failed trial did not reach balance within budget; count it
            // as undecided and surface the failure.
            ++cell.undecided;
            ++cell.failures;
        }
    }
    cell.p_hb = static_cast<double>(cell.balanced) / static_cast<double>(trials);
    cell.std_err = binomial_std_err(cell.p_hb, trials);
    return cell;
}

}  // namespace

CellEstimate estimate_cell(double beta1, double beta2, int n, int trials, const GridSpec& spec) {
    spec.validate();
    if (trials < 1) throw UsageError("estimate_cell: trials must be >= 1");
    const std::size_t beta1_idx = index_of(spec.beta1_values, beta1, "beta1");
    const std::size_t beta2_idx = index_of(spec.beta2_values, beta2, "beta2");
    auto size_it = std::find(spec.sizes.begin(), spec.sizes.end(), n);
    if (size_it == spec.sizes.end())
        throw UsageError("estimate_cell: n = " + std::to_string(n) + " is not a grid size");
    const std::size_t size_idx = static_cast<std::size_t>(size_it - spec.sizes.begin());
    return estimate_cell_at(spec, size_idx, beta1_idx, beta2_idx, trials);
}

int resolve_worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HEIDER_WORKERS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || parsed < 1)
            throw ConfigError("HEIDER_WORKERS must be a positive integer, got \"" +
                              std::string(env) + "\"");
        return static_cast<int>(parsed);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<CellEstimate> sweep(const GridSpec& spec, int workers) {
    spec.validate();
    const std::size_t total = spec.cell_count();
    std::vector<CellEstimate> cells(total);

    // Cells are independent work items; each worker claims the next index
    // and writes into its own slot, so the output order (and every value)
    // is schedule-independent.
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker_loop = [&] {
        try {
            for (;;) {
                const std::size_t idx = next.fetch_add(1);
                if (idx >= total || failed.load()) return;
                const std::size_t b2 = idx % spec.beta2_values.size();
                const std::size_t b1 = (idx / spec.beta2_values.size()) % spec.beta1_values.size();
                const std::size_t sz = idx / (spec.beta2_values.size() * spec.beta1_values.size());
                cells[idx] = estimate_cell_at(spec, sz, b1, b2, spec.trials_per_cell);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            failed.store(true);
        }
    };

    const int pool = std::min<std::size_t>(static_cast<std::size_t>(resolve_worker_count(workers)),
                                           total);
    if (pool <= 1) {
        worker_loop();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(pool));
        for (int w = 0; w < pool; ++w) threads.emplace_back(worker_loop);
        for (auto& t : threads) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return cells;
}

}  // namespace heider
