#pragma once

#include "fts/degree.hpp"
#include "fts/types.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace fts {

/// A pseudo-ultrametric on a state set: zero diagonal, symmetric, and
/// d(s,u) <= max(d(s,t), d(t,u)). Only the strict upper triangle is stored,
/// so the first two axioms hold by construction; the strong triangle
/// inequality is the caller's obligation (validate_metric checks it).
class StateMetric {
public:
    StateMetric() = default;

    /// The all-zero metric; the greatest element of the reversed pointwise
    /// order the fixpoint iteration starts from.
    explicit StateMetric(std::size_t n)
        : n_(n), upper_(n < 2 ? 0 : n * (n - 1) / 2) {}

    static StateMetric top(std::size_t n) { return StateMetric(n); }

    /// d(s,t) = 1 for s != t.
    static StateMetric discrete(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    Degree operator()(std::size_t i, std::size_t j) const noexcept {
        if (i == j) return Degree::zero();
        return upper_[pack(i, j)];
    }

    void set(std::size_t i, std::size_t j, Degree value) {
        if (i == j) {
            if (!value.is_zero()) throw Error("diagonal of a metric must be 0");
            return;
        }
        upper_[pack(i, j)] = value;
    }

    friend bool operator==(const StateMetric&, const StateMetric&) = default;

private:
    std::size_t pack(std::size_t i, std::size_t j) const noexcept {
        if (i > j) std::swap(i, j);
        return i * n_ - i * (i + 1) / 2 + (j - i - 1);
    }

    std::size_t n_ = 0;
    std::vector<Degree> upper_;
};

/// a(s,t) <= b(s,t) for every pair. Note the lattice order on metrics is
/// the reverse: a precedes b iff pointwise_leq(b, a).
bool pointwise_leq(const StateMetric& a, const StateMetric& b);

/// Pointwise max of two metrics (their infimum in the reversed order);
/// again a pseudo-ultrametric.
StateMetric pointwise_max(const StateMetric& a, const StateMetric& b);

/// Checks a full matrix for the three axioms, exactly. On failure the
/// first violated axiom is reported with its witness states.
Validated<StateMetric> validate_metric(const std::vector<std::vector<Degree>>& matrix,
                                       const std::vector<std::string>& state_names);

} // namespace fts
