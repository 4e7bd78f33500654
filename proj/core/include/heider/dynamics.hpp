#pragma once

#include <cstdint>
#include <limits>
#include <utility>

#include "heider/balance.hpp"
#include "heider/multiplex.hpp"

namespace heider {

// Overshoot clamp: one machine epsilon inside +-1. The saturation factor
// (1 - w^2) makes +-1 invariant analytically; the clamp only catches the
// integrator stepping microscopically past it.
inline constexpr double kWeightClamp = 1.0 - std::numeric_limits<double>::epsilon();

/// Numerical controls of a single trajectory. Model time is dimensionless.
struct DynamicsConfig {
    int n = 4;
    double dt = 0.01;
    double t_max = 100.0;
    // Minimum |w| for a link to count as locked when testing stationarity.
    double saturation_floor = 0.99;
    // Consecutive saturated checks with an unchanged joint sign pattern
    // required before a trajectory is classified.
    int stationarity_window = 3;
    // Divide the triadic sum by (n-2). Keeps the triadic drive O(1), so the
    // coupling coefficients compare across network sizes.
    bool normalize_triadic_sum = true;

    void validate() const;  // throws UsageError naming the offending field
};

enum class TrialStatus { Balanced, Jammed, Undecided };

const char* to_string(TrialStatus status);

/// Classification of one simulated trajectory.
///  - Balanced:  saturated, stationary sign pattern, multiplex in balance
///  - Jammed:    saturated and stationary, but not balanced
///  - Undecided: t_max exhausted before the pattern locked
struct TrialOutcome {
    TrialStatus status = TrialStatus::Undecided;
    double t_final = 0.0;
    BalanceReport report;
    bool layers_sign_identical = false;

    bool operator==(const TrialOutcome&) const = default;
};

/// Fresh random bilayer state: every off-diagonal weight i.i.d. uniform on
/// the open interval (-1, +1), drawn for i < j in row-major order, layer 1
/// first, from an mt19937_64 seeded with `seed`. Deterministic.
MultiplexState init_random_state(int n, std::uint64_t seed);

/// Right-hand side of the coupled bilayer system. For layer a with other
/// layer b:
///
///   d w_ij^(a)/dt = (1 - (w_ij^(a))^2) * (T_ij^(a) + beta_a * w_ij^(b)),
///   T_ij^(a)      = sum_{k != i,j} w_ik^(a) w_kj^(a)   [/(n-2) if normalized]
///
/// beta1 multiplies layer-2 weights in layer 1's equation. Outputs are
/// symmetric with zero diagonal.
std::pair<WeightMatrix, WeightMatrix> derivative(const MultiplexState& m, const CouplingParams& p,
                                                 const DynamicsConfig& cfg);

/// Classic fixed-step RK4 over the bilayer field, with reusable stage
/// buffers. Only i < j entries are computed and then mirrored, so symmetry
/// and the zero diagonal hold exactly at every step.
class Rk4Integrator {
public:
    explicit Rk4Integrator(int n);

    /// Advance m by one step of cfg.dt in place. Throws NumericalError
    /// (carrying step_index) if a non-finite value appears.
    void step(MultiplexState& m, const CouplingParams& p, const DynamicsConfig& cfg,
              long step_index = 0);

private:
    WeightMatrix k1_[2], k2_[2], k3_[2], k4_[2], tmp_[2];
};

/// One RK4 step as a pure function; convenience wrapper over Rk4Integrator.
MultiplexState integrate_step(const MultiplexState& m, const CouplingParams& p,
                              const DynamicsConfig& cfg);

/// Integrate from init_random_state(cfg.n, seed) until classification.
/// Every ceil(1/dt) steps the state is checked: once all links in both
/// layers satisfy |w| >= saturation_floor and the joint sign pattern has
/// been unchanged for stationarity_window consecutive checks, the trial is
/// classified Balanced or Jammed from the eps = 0 balance report. If t_max
/// is exhausted first the trial is Undecided. Pure deterministic function
/// of (p, cfg, seed).
TrialOutcome run_trial(const CouplingParams& p, const DynamicsConfig& cfg, std::uint64_t seed);

}  // namespace heider
