#pragma once

#include "fts/degree.hpp"
#include "fts/metric.hpp"
#include "fts/partition.hpp"
#include "fts/system.hpp"
#include "fts/types.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace fts {

/// One application of the metric transformer: the new distance between two
/// states is the worst label-wise Hausdorff distance between their
/// transition sets, measured by the lifted metric.
StateMetric delta_step(const System& sys, const StateMetric& d);

struct FixpointRun {
    StateMetric metric;       // the behavioral distance d_f
    std::size_t applications; // delta applications until two iterates agree
    std::vector<StateMetric> iterates; // d_0 .. d_n, only when traced
};

/// Greatest-fixed-point iteration from the all-zero metric. Iterates are
/// pointwise non-decreasing and compared exactly; the iteration must
/// stabilize within |S|^2 * (|V|+2) steps, where V is the set of degrees
/// occurring in the system - exceeding that bound signals a bug and throws.
FixpointRun behavioral_distance_run(const System& sys, bool trace = false);

StateMetric behavioral_distance(const System& sys);

/// Partition of states by d_f(s,t) <= lambda; an equivalence thanks to the
/// strong triangle inequality. Recomputes d_f.
Partition quotient(const System& sys, Degree lambda);

/// Same, but over an already computed metric.
Partition quotient(const StateMetric& dist, Degree lambda);

/// Zadeh similarity 1 - d_f, as a full matrix (diagonal 1).
std::vector<std::vector<Degree>> similarity(const System& sys);

/// Bisimilarity via partition refinement: states stay together while each
/// alternative of one is matched by an alternative of the other with equal
/// per-block heights, under the current partition.
Partition greatest_bisimulation(const System& sys);

/// The 0/1 metric of an equivalence relation (distance 0 inside classes).
/// Throws Error naming the failed axiom if the relation is not reflexive,
/// symmetric and transitive over {0, .., n-1}.
StateMetric metric_from_relation(const std::vector<std::pair<StateId, StateId>>& relation,
                                 std::size_t n);

/// d precedes delta(d) in the lattice order, i.e. delta never increases any
/// entry above d's.
bool is_post_fixed_point(const System& sys, const StateMetric& d);

} // namespace fts
