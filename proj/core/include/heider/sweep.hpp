#pragma once

#include <cstdint>
#include <vector>

#include "heider/dynamics.hpp"
#include "heider/rng.hpp"

namespace heider {

/// A (beta1, beta2) x sizes lattice with the Monte Carlo budget and seed.
/// The dynamics member is a template whose n is replaced per size.
struct GridSpec {
    std::vector<double> beta1_values;
    std::vector<double> beta2_values;
    std::vector<int> sizes;
    int trials_per_cell = 200;
    std::uint64_t master_seed = 42;
    DynamicsConfig dynamics;

    void validate() const;  // throws UsageError
    std::size_t cell_count() const {
        return beta1_values.size() * beta2_values.size() * sizes.size();
    }
};

/// Monte Carlo estimate of P_HB for one grid cell. failures counts trials
/// that ended in a numerical error; they are tallied as undecided.
struct CellEstimate {
    double beta1 = 0.0;
    double beta2 = 0.0;
    int n = 0;
    int trials = 0;
    int balanced = 0;
    int jammed = 0;
    int undecided = 0;
    int failures = 0;
    double p_hb = 0.0;
    double std_err = 0.0;

    bool operator==(const CellEstimate&) const = default;
};

/// Binomial standard error sqrt(p (1 - p) / trials).
double binomial_std_err(double p, int trials);

/// Linear cell index in the canonical sweep order: sizes outermost, then
/// beta1, then beta2 innermost, all ascending. This index feeds the seed
/// derivation, so it is part of the reproducibility contract.
std::size_t cell_linear_index(const GridSpec& spec, std::size_t size_idx, std::size_t beta1_idx,
                              std::size_t beta2_idx);

/// Estimate one cell with `trials` independent trials, seeded by
/// derive_trial_seed(master_seed, cell_index, trial_index). beta1, beta2
/// and n must be members of the spec's lists (they locate the cell index).
CellEstimate estimate_cell(double beta1, double beta2, int n, int trials, const GridSpec& spec);

/// Every cell of the grid, in canonical order, computed with a fixed-size
/// worker pool. workers <= 0 resolves the HEIDER_WORKERS environment
/// variable, then hardware concurrency. The worker count never affects the
/// values, only the wall time.
std::vector<CellEstimate> sweep(const GridSpec& spec, int workers = 0);

/// Worker count resolution used by sweep; exposed for the CLI.
int resolve_worker_count(int requested);

}  // namespace heider
