#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "heider/errors.hpp"

namespace heider {

/// Dense symmetric real matrix with a fixed zero diagonal, stored as a full
/// row-major n*n block so rows are contiguous. All writes go through set(),
/// which mirrors (i,j) and (j,i); symmetry is therefore exact, never
/// approximate. Used both for link weights and for their time derivatives,
/// so no [-1,+1] bound is enforced here (see MultiplexState).
class WeightMatrix {
public:
    explicit WeightMatrix(int n) : n_(check_size(n)), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int size() const { return n_; }

    double operator()(int i, int j) const { return a_[flat_index(i, j)]; }

    void set(int i, int j, double v) {
        if (i == j) throw UsageError("WeightMatrix::set: diagonal entries are fixed at zero");
        a_[flat_index(i, j)] = v;
        a_[flat_index(j, i)] = v;
    }

    /// Contiguous row i; with the zero diagonal, dot(row i, row j) equals
    /// the triadic sum over third parties k.
    std::span<const double> row(int i) const {
        assert(i >= 0 && i < n_);
        return {a_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
    }

    std::span<const double> flat() const { return {a_.data(), a_.size()}; }

    bool operator==(const WeightMatrix&) const = default;

private:
    static int check_size(int n) {
        if (n < 1) throw UsageError("WeightMatrix: node count must be >= 1");
        return n;
    }

    std::size_t flat_index(int i, int j) const {
        assert(i >= 0 && j >= 0 && i < n_ && j < n_);
        return static_cast<std::size_t>(i) * n_ + j;
    }

    int n_;
    std::vector<double> a_;
};

/// Symmetric sign matrix with entries in {-1, 0, +1} and zero diagonal.
/// A zero off-diagonal entry means "edge absent or sign-indeterminate".
class SignMatrix {
public:
    explicit SignMatrix(int n) : n_(check_size(n)), s_(static_cast<std::size_t>(n) * n, 0) {}

    int size() const { return n_; }

    int operator()(int i, int j) const { return s_[flat_index(i, j)]; }

    void set(int i, int j, int sign) {
        if (i == j) throw UsageError("SignMatrix::set: diagonal entries are fixed at zero");
        if (sign < -1 || sign > 1) throw UsageError("SignMatrix::set: sign must be -1, 0 or +1");
        s_[flat_index(i, j)] = static_cast<std::int8_t>(sign);
        s_[flat_index(j, i)] = static_cast<std::int8_t>(sign);
    }

    /// True when every off-diagonal entry is nonzero (complete signed graph).
    bool complete() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if ((*this)(i, j) == 0) return false;
        return true;
    }

    bool operator==(const SignMatrix&) const = default;

private:
    static int check_size(int n) {
        if (n < 1) throw UsageError("SignMatrix: node count must be >= 1");
        return n;
    }

    std::size_t flat_index(int i, int j) const {
        assert(i >= 0 && j >= 0 && i < n_ && j < n_);
        return static_cast<std::size_t>(i) * n_ + j;
    }

    int n_;
    std::vector<std::int8_t> s_;
};

}  // namespace heider
