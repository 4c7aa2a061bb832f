#pragma once

#include "fts/degree.hpp"
#include "fts/distribution.hpp"
#include "fts/metric.hpp"
#include "fts/partition.hpp"
#include "fts/types.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fts {

/// A solution of the max-min transport system between two distributions:
/// row suprema reproduce mu, column suprema reproduce eta. Sparse; absent
/// cells are 0.
struct TransportMatrix {
    struct Cell {
        StateId row;
        StateId col;
        Degree value;
    };

    std::vector<Cell> cells;

    Degree at(StateId s, StateId t) const noexcept;
};

/// The transport system is solvable iff the two heights agree.
bool transport_feasible(const Distribution& mu, const Distribution& eta);

/// The constructive solution: with s' the first state attaining mu's height
/// and t' the first attaining eta's, sends mu's row mass to column t' and
/// fills row s' with eta. Throws Error when the heights differ.
TransportMatrix canonical_transport(const Distribution& mu, const Distribution& eta);

/// Whether row suprema equal mu and column suprema equal eta everywhere.
bool satisfies_transport_constraints(const TransportMatrix& x, const Distribution& mu,
                                     const Distribution& eta);

/// The lifted pseudo-ultrametric between distributions: 1 on height
/// mismatch, otherwise the least objective max min(d(s,t), x(s,t)) over
/// transport solutions x. A value <= c is achievable iff the maximal matrix
/// capped at c outside the c-ball of d still attains every row and column
/// supremum (lifted_distance_at_most); the optimum is the least such c from
/// the finite set {0} u {d(s,t)} u {mu(s)} u {eta(t)}, evaluated here in
/// closed form as the worst per-row/per-column attainment threshold.
Degree lifted_distance(const StateMetric& d, const Distribution& mu,
                       const Distribution& eta);

/// The decision form: is the lifted distance at most c? This is the capped
/// maximal-matrix test lifted_distance scans over its candidate set.
bool lifted_distance_at_most(const StateMetric& d, const Distribution& mu,
                             const Distribution& eta, Degree c);

/// Independent oracle: enumerates all transport matrices with entries drawn
/// from {0} u {mu(s)} u {eta(t)} and takes the minimum objective directly.
/// Throws Error when the combined support exceeds max_support states.
Degree lifted_distance_bruteforce(const StateMetric& d, const Distribution& mu,
                                  const Distribution& eta,
                                  std::size_t max_support = 5);

/// Hausdorff distance between two finite sets, with distance 1 to the empty
/// set and 0 between two empty sets.
template <typename T, typename DistFn>
Degree hausdorff(const std::vector<T>& a_set, const std::vector<T>& b_set, DistFn&& dist) {
    if (a_set.empty() && b_set.empty()) return Degree::zero();
    auto directed = [&](const std::vector<T>& from, const std::vector<T>& to) {
        Degree worst;
        for (const T& a : from) {
            if (to.empty()) return Degree::one();
            Degree nearest = Degree::one();
            for (const T& b : to) nearest = min(nearest, dist(a, b));
            worst = max(worst, nearest);
        }
        return worst;
    };
    return max(directed(a_set, b_set), directed(b_set, a_set));
}

/// Lifting of an equivalence relation to distributions: mu and eta are
/// related iff they give every class the same height.
bool lifted_relation_contains(const Partition& partition, const Distribution& mu,
                              const Distribution& eta);

/// Same test against a flat state -> block assignment (the refinement loop
/// works on these before any Partition is materialized).
bool class_heights_equal(std::span<const std::uint32_t> block_of, std::uint32_t blocks,
                         const Distribution& mu, const Distribution& eta);

/// Lifting of an arbitrary relation: true iff some transport solution is
/// supported inside the relation. Tests the maximal candidate
/// w(s,t) = min(mu(s), eta(t)) on relation pairs against the suprema.
bool weight_function_exists(const std::vector<std::pair<StateId, StateId>>& relation,
                            const Distribution& mu, const Distribution& eta);

} // namespace fts
