#include "heider/balance.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace heider {

SignMatrix sign_pattern(const WeightMatrix& w, double eps) {
    if (!(eps >= 0.0)) throw UsageError("sign_pattern: eps must be >= 0");
    const int n = w.size();
    SignMatrix s(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = w(i, j);
            if (std::fabs(v) > eps) s.set(i, j, v > 0.0 ? 1 : -1);
        }
    return s;
}

TriadState triad_state(const SignMatrix& s, int i, int j, int k) {
    const int n = s.size();
    if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
        throw UsageError("triad_state: node index out of range");
    if (i == j || j == k || i == k)
        throw UsageError("triad_state: node indices must be distinct");
    const int product = s(i, j) * s(j, k) * s(k, i);
    if (product == 0) return TriadState::Indeterminate;
    return product > 0 ? TriadState::Balanced : TriadState::Unbalanced;
}

namespace {

void require_complete(const SignMatrix& s, const char* op) {
    if (!s.complete())
        throw IndeterminateSignError(std::string(op) +
                                     ": sign pattern has zero entries, balance is indeterminate");
}

}  // namespace

double triad_balance_fraction(const SignMatrix& s) {
    require_complete(s, "triad_balance_fraction");
    const int n = s.size();
    long total = 0, balanced = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                ++total;
                if (s(i, j) * s(j, k) * s(k, i) > 0) ++balanced;
            }
    // Complete graphs of size < 3 have no triads; treat them as fully balanced.
    if (total == 0) return 1.0;
    return static_cast<double>(balanced) / static_cast<double>(total);
}

bool layer_balanced_triads(const SignMatrix& s) {
    require_complete(s, "layer_balanced_triads");
    const int n = s.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (s(i, j) * s(j, k) * s(k, i) < 0) return false;
    return true;
}

bool layer_balanced_cycles(const SignMatrix& s) {
    const int n = s.size();
    // Two-color by BFS: color across a positive edge is kept, across a
    // negative edge flipped. A conflict is exactly a negative cycle.
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    for (int start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        queue.clear();
        queue.push_back(start);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            for (int v = 0; v < n; ++v) {
                const int sign = s(u, v);
                if (sign == 0) continue;
                const int expected = sign > 0 ? color[u] : 1 - color[u];
                if (color[v] == -1) {
                    color[v] = expected;
                    queue.push_back(v);
                } else if (color[v] != expected) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool node_balanced(const SignMatrix& s, int i) {
    const int n = s.size();
    if (i < 0 || i >= n) throw UsageError("node_balanced: node index out of range");
    std::vector<int> members;
    members.push_back(i);
    for (int j = 0; j < n; ++j)
        if (j != i && s(i, j) != 0) members.push_back(j);
    // Induced close neighborhood: all members, all edges among them.
    const int m = static_cast<int>(members.size());
    SignMatrix sub(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const int sign = s(members[a], members[b]);
            if (sign != 0) sub.set(a, b, sign);
        }
    return layer_balanced_cycles(sub);
}

BalanceReport multiplex_balance_report(const MultiplexState& m, double eps) {
    const int n = m.size();
    BalanceReport report;
    std::array<SignMatrix, 2> signs{sign_pattern(m.layer(0), eps), sign_pattern(m.layer(1), eps)};
    for (int k = 0; k < 2; ++k) {
        const SignMatrix& s = signs[static_cast<std::size_t>(k)];
        auto& nodes = report.node_balanced[static_cast<std::size_t>(k)];
        nodes.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) nodes[static_cast<std::size_t>(i)] = node_balanced(s, i);
        if (s.complete()) {
            report.layer_balanced[static_cast<std::size_t>(k)] = layer_balanced_triads(s);
            report.triad_fraction[static_cast<std::size_t>(k)] = triad_balance_fraction(s);
        } else {
            // Zero signs: conservative, the layer is not considered balanced
            // and its triad fraction stays indeterminate.
            report.layer_balanced[static_cast<std::size_t>(k)] = false;
            report.triad_fraction[static_cast<std::size_t>(k)] = std::nullopt;
        }
    }
    report.multiplex_balanced = report.layer_balanced[0] && report.layer_balanced[1];
    report.layers_sign_identical = signs[0] == signs[1] && signs[0].complete();
    return report;
}

std::uint64_t enumerate_balanced_configs(int n) {
    if (n < 3 || n > 6)
        throw UsageError("enumerate_balanced_configs: n must be between 3 and 6");
    const int edges = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << edges;
    std::uint64_t balanced = 0;
    SignMatrix s(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        int e = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++e)
                s.set(i, j, (mask >> e) & 1 ? 1 : -1);
        const bool by_triads = layer_balanced_triads(s);
        const bool by_cycles = layer_balanced_cycles(s);
        if (by_triads != by_cycles)
            throw std::logic_error(
                "enumerate_balanced_configs: triad and two-coloring checkers disagree on "
                "assignment " +
                std::to_string(mask) + " of K_" + std::to_string(n));
        if (by_triads) ++balanced;
    }
    return balanced;
}

}  // namespace heider
