#include "heider/dynamics.hpp"

#include <cmath>
#include <optional>
#include <random>
#include <utility>

#include "heider/rng.hpp"

namespace heider {

void DynamicsConfig::validate() const {
    if (n < 3) throw UsageError("DynamicsConfig: n must be >= 3");
    if (!(dt > 0.0)) throw UsageError("DynamicsConfig: dt must be > 0");
    if (!(t_max >= dt)) throw UsageError("DynamicsConfig: t_max must be >= dt");
    if (!(saturation_floor > 0.0 && saturation_floor < 1.0))
        throw UsageError("DynamicsConfig: saturation_floor must lie in (0, 1)");
    if (stationarity_window < 1)
        throw UsageError("DynamicsConfig: stationarity_window must be >= 1");
}

const char* to_string(TrialStatus status) {
    switch (status) {
        case TrialStatus::Balanced: return "balanced";
        case TrialStatus::Jammed: return "jammed";
        case TrialStatus::Undecided: return "undecided";
    }
    return "unknown";
}

MultiplexState init_random_state(int n, std::uint64_t seed) {
    if (n < 3) throw UsageError("init_random_state: n must be >= 3");
    std::mt19937_64 rng(seed);
    WeightMatrix layers[2] = {WeightMatrix(n), WeightMatrix(n)};
    for (auto& layer : layers)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) layer.set(i, j, uniform_weight(rng));
    return {std::move(layers[0]), std::move(layers[1])};
}

namespace {

// d w_ij^(a)/dt for both layers, written into d[0], d[1]. The dot product
// of rows i and j is the triadic sum: zero diagonals kill the k = i and
// k = j terms. Only i < j is computed; set() mirrors.
void derivative_into(const WeightMatrix& w1, const WeightMatrix& w2, const CouplingParams& p,
                     bool normalize, WeightMatrix* d) {
    const int n = w1.size();
    const double scale = normalize ? 1.0 / (n - 2) : 1.0;
    const WeightMatrix* w[2] = {&w1, &w2};
    const double beta[2] = {p.beta1, p.beta2};
    for (int a = 0; a < 2; ++a) {
        const WeightMatrix& focal = *w[a];
        const WeightMatrix& other = *w[1 - a];
        for (int i = 0; i < n; ++i) {
            const auto row_i = focal.row(i);
            for (int j = i + 1; j < n; ++j) {
                const auto row_j = focal.row(j);
                double triadic = 0.0;
                for (int k = 0; k < n; ++k) triadic += row_i[k] * row_j[k];
                const double wij = focal(i, j);
                d[a].set(i, j, (1.0 - wij * wij) * (triadic * scale + beta[a] * other(i, j)));
            }
        }
    }
}

bool all_saturated(const MultiplexState& m, double floor) {
    const int n = m.size();
    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (std::fabs(m.layer(a)(i, j)) < floor) return false;
    return true;
}

}  // namespace

std::pair<WeightMatrix, WeightMatrix> derivative(const MultiplexState& m, const CouplingParams& p,
                                                 const DynamicsConfig& cfg) {
    WeightMatrix d[2] = {WeightMatrix(m.size()), WeightMatrix(m.size())};
    derivative_into(m.layer(0), m.layer(1), p, cfg.normalize_triadic_sum, d);
    return {std::move(d[0]), std::move(d[1])};
}

Rk4Integrator::Rk4Integrator(int n)
    : k1_{WeightMatrix(n), WeightMatrix(n)},
      k2_{WeightMatrix(n), WeightMatrix(n)},
      k3_{WeightMatrix(n), WeightMatrix(n)},
      k4_{WeightMatrix(n), WeightMatrix(n)},
      tmp_{WeightMatrix(n), WeightMatrix(n)} {}

void Rk4Integrator::step(MultiplexState& m, const CouplingParams& p, const DynamicsConfig& cfg,
                         long step_index) {
    const int n = m.size();
    const double dt = cfg.dt;
    const bool normalize = cfg.normalize_triadic_sum;

    derivative_into(m.layer(0), m.layer(1), p, normalize, k1_);

    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                tmp_[a].set(i, j, m.layer(a)(i, j) + 0.5 * dt * k1_[a](i, j));
    derivative_into(tmp_[0], tmp_[1], p, normalize, k2_);

    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                tmp_[a].set(i, j, m.layer(a)(i, j) + 0.5 * dt * k2_[a](i, j));
    derivative_into(tmp_[0], tmp_[1], p, normalize, k3_);

    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) tmp_[a].set(i, j, m.layer(a)(i, j) + dt * k3_[a](i, j));
    derivative_into(tmp_[0], tmp_[1], p, normalize, k4_);

    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double v = m.layer(a)(i, j) +
                           dt / 6.0 *
                               (k1_[a](i, j) + 2.0 * k2_[a](i, j) + 2.0 * k3_[a](i, j) +
                                k4_[a](i, j));
                if (!std::isfinite(v))
                    throw NumericalError("Rk4Integrator: non-finite link weight", step_index);
                if (v > 1.0)
                    v = kWeightClamp;
                else if (v < -1.0)
                    v = -kWeightClamp;
                m.layer(a).set(i, j, v);
            }
}

MultiplexState integrate_step(const MultiplexState& m, const CouplingParams& p,
                              const DynamicsConfig& cfg) {
    cfg.validate();
    MultiplexState next = m;
    Rk4Integrator integrator(m.size());
    integrator.step(next, p, cfg);
    return next;
}

TrialOutcome run_trial(const CouplingParams& p, const DynamicsConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    MultiplexState state = init_random_state(cfg.n, seed);
    Rk4Integrator integrator(cfg.n);

    const long total_steps = static_cast<long>(std::ceil(cfg.t_max / cfg.dt - 1e-9));
    const long check_every = static_cast<long>(std::ceil(1.0 / cfg.dt));

    std::optional<std::pair<SignMatrix, SignMatrix>> locked_pattern;
    int consecutive = 0;

    for (long s = 1; s <= total_steps; ++s) {
        integrator.step(state, p, cfg, s);
        if (s % check_every != 0) continue;
        if (!all_saturated(state, cfg.saturation_floor)) {
            locked_pattern.reset();
            consecutive = 0;
            continue;
        }
        std::pair<SignMatrix, SignMatrix> pattern{sign_pattern(state.layer(0), 0.0),
                                                  sign_pattern(state.layer(1), 0.0)};
        if (locked_pattern && pattern == *locked_pattern) {
            ++consecutive;
        } else {
            locked_pattern = std::move(pattern);
            consecutive = 1;
        }
        if (consecutive >= cfg.stationarity_window) {
            TrialOutcome outcome;
            outcome.report = multiplex_balance_report(state, 0.0);
            outcome.status =
                outcome.report.multiplex_balanced ? TrialStatus::Balanced : TrialStatus::Jammed;
            outcome.t_final = static_cast<double>(s) * cfg.dt;
            outcome.layers_sign_identical = outcome.report.layers_sign_identical;
            return outcome;
        }
    }

    TrialOutcome outcome;
    outcome.status = TrialStatus::Undecided;
    outcome.t_final = cfg.t_max;
    outcome.report = multiplex_balance_report(state, 0.0);
    outcome.layers_sign_identical = outcome.report.layers_sign_identical;
    return outcome;
}

}  // namespace heider
