#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "heider/matrix.hpp"
#include "heider/multiplex.hpp"

namespace heider {

// Sign threshold for mid-trajectory diagnostics. Final trial classification
// always uses eps = 0 together with the saturation requirement of the
// dynamics, so no sign is ever read off a half-converged weight.
inline constexpr double kDiagnosticSignEps = 0.5;

enum class TriadState { Balanced, Unbalanced, Indeterminate };

/// Balance summary of a bilayer state. triad_fraction is empty for a layer
/// whose thresholded sign pattern has zero entries (indeterminate signs);
/// such a layer is never reported balanced.
struct BalanceReport {
    std::array<bool, 2> layer_balanced{false, false};
    bool multiplex_balanced = false;
    std::array<std::vector<bool>, 2> node_balanced{};
    std::array<std::optional<double>, 2> triad_fraction{};
    bool layers_sign_identical = false;

    bool operator==(const BalanceReport&) const = default;
};

/// Threshold continuous weights to signs: sign(w[i][j]) where |w[i][j]| > eps,
/// 0 otherwise. eps must be >= 0.
SignMatrix sign_pattern(const WeightMatrix& w, double eps);

/// State of the triad {i,j,k}: Balanced iff the product of its three edge
/// signs is positive, Indeterminate if any of them is zero. The indices must
/// be distinct and in range.
TriadState triad_state(const SignMatrix& s, int i, int j, int k);

/// Fraction of balanced triads among all C(n,3), on a complete signed graph.
/// Throws IndeterminateSignError on any zero off-diagonal entry.
double triad_balance_fraction(const SignMatrix& s);

/// True iff every triad of the complete signed graph s is balanced. On
/// complete graphs this is equivalent to every cycle having positive sign
/// product. Throws IndeterminateSignError on any zero off-diagonal entry.
bool layer_balanced_triads(const SignMatrix& s);

/// Balance on an arbitrary signed graph (zero entries = absent edges):
/// true iff the nodes can be 2-colored so that every positive edge joins
/// same-colored nodes and every negative edge joins different-colored ones
/// (Cartwright-Harary). Components are colored independently; acyclic
/// graphs are vacuously balanced.
bool layer_balanced_cycles(const SignMatrix& s);

/// Node-level balance: the subgraph induced by {i} and its neighbors,
/// including all edges among the neighbors, passes layer_balanced_cycles.
bool node_balanced(const SignMatrix& s, int i);

/// Full balance report of a bilayer state, with layer signs read at
/// threshold eps. Layer-level balance uses the triad test; a layer whose
/// sign pattern is incomplete is reported unbalanced with an empty triad
/// fraction. layers_sign_identical requires entry-wise equal patterns with
/// no zero entries.
BalanceReport multiplex_balance_report(const MultiplexState& m, double eps);

/// Exhaustive oracle: iterate all 2^C(n,2) sign assignments on K_n, count
/// the ones that are balanced, and cross-check the triad test against the
/// two-coloring test on every assignment (throws std::logic_error if they
/// ever disagree). Valid for 3 <= n <= 6. The count equals 2^(n-1) by the
/// two-faction structure theorem.
std::uint64_t enumerate_balanced_configs(int n);

}  // namespace heider
