#include "heider/graph_text.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "heider/errors.hpp"

namespace heider {

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& what) {
    throw IoError(source + ": " + what);
}

struct EdgeHeader {
    int n = 0;
    long m = 0;
};

EdgeHeader read_header(std::istream& in, const std::string& source) {
    EdgeHeader h;
    if (!(in >> h.n >> h.m)) fail(source, "expected header line \"n m\"");
    if (h.n < 1) fail(source, "node count must be >= 1");
    if (h.m < 0) fail(source, "edge count must be >= 0");
    const long max_edges = static_cast<long>(h.n) * (h.n - 1) / 2;
    if (h.m > max_edges) fail(source, "edge count exceeds C(n,2)");
    return h;
}

void read_edge_indices(std::istream& in, const EdgeHeader& h, long line, const std::string& source,
                       int& i, int& j) {
    if (!(in >> i >> j)) fail(source, "edge line " + std::to_string(line) + ": expected \"i j s\"");
    if (i < 0 || j < 0 || i >= h.n || j >= h.n)
        fail(source, "edge line " + std::to_string(line) + ": node index out of range");
    if (i == j) fail(source, "edge line " + std::to_string(line) + ": self loop");
}

void reject_trailing(std::istream& in, const std::string& source) {
    std::string tail;
    if (in >> tail) fail(source, "trailing content after the last edge: \"" + tail + "\"");
}

}  // namespace

SignMatrix read_sign_graph(std::istream& in, const std::string& source) {
    const EdgeHeader h = read_header(in, source);
    SignMatrix s(h.n);
    for (long line = 1; line <= h.m; ++line) {
        int i, j, sign;
        read_edge_indices(in, h, line, source, i, j);
        if (!(in >> sign)) fail(source, "edge line " + std::to_string(line) + ": missing sign");
        if (sign != -1 && sign != 1)
            fail(source, "edge line " + std::to_string(line) + ": sign must be -1 or +1");
        if (s(i, j) != 0) fail(source, "edge line " + std::to_string(line) + ": duplicate edge");
        s.set(i, j, sign);
    }
    reject_trailing(in, source);
    return s;
}

void write_sign_graph(std::ostream& out, const SignMatrix& s) {
    const int n = s.size();
    long m = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (s(i, j) != 0) ++m;
    out << n << ' ' << m << '\n';
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (s(i, j) != 0) out << i << ' ' << j << ' ' << s(i, j) << '\n';
}

WeightMatrix read_weight_graph(std::istream& in, const std::string& source) {
    const EdgeHeader h = read_header(in, source);
    WeightMatrix w(h.n);
    SignMatrix seen(h.n);
    for (long line = 1; line <= h.m; ++line) {
        int i, j;
        double v;
        read_edge_indices(in, h, line, source, i, j);
        if (!(in >> v)) fail(source, "edge line " + std::to_string(line) + ": missing weight");
        if (!std::isfinite(v) || std::fabs(v) > 1.0)
            fail(source, "edge line " + std::to_string(line) + ": weight must lie in [-1, +1]");
        if (seen(i, j) != 0) fail(source, "edge line " + std::to_string(line) + ": duplicate edge");
        seen.set(i, j, 1);
        w.set(i, j, v);
    }
    reject_trailing(in, source);
    return w;
}

void write_weight_graph(std::ostream& out, const WeightMatrix& w) {
    const int n = w.size();
    long m = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (w(i, j) != 0.0) ++m;
    out << n << ' ' << m << '\n';
    char buf[40];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (w(i, j) != 0.0) {
                // %.17g round-trips doubles exactly.
                std::snprintf(buf, sizeof buf, "%.17g", w(i, j));
                out << i << ' ' << j << ' ' << buf << '\n';
            }
}

}  // namespace heider
