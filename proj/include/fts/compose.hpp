#pragma once

#include "fts/system.hpp"
#include "fts/types.hpp"

#include <string>
#include <vector>

namespace fts {

/// Labels for which s has at least one non-empty alternative; the explicit
/// empty distribution does not make a label active.
std::vector<LabelId> active_labels(const System& sys, StateId s);

/// Name of the composed state for (left, right): "left|right", or
/// "left||right" under the product.
std::string pair_state_name(const System& sys, StateId left, StateId right, bool product);

/// Row-major index of (left, right) in a composed system over S x S.
StateId pair_state_index(const System& sys, StateId left, StateId right);

/// Asynchronous composition of a system with itself over S x S: on labels
/// active on one side only, the active side moves and the other idles with
/// degree 1; on labels active on both sides, all pairwise meets; otherwise
/// no transition. Pair states are named "left|right".
System parallel_composition(const System& sys);

/// Strictly synchronous composition: pairwise meets on labels active on
/// both sides, nothing elsewhere. Pair states are named "left||right".
System product_composition(const System& sys);

/// The sub-system on states reachable from `from` through any distribution
/// support, keeping declaration order.
System reachable_subsystem(const System& sys, StateId from);

/// Side-by-side union of two systems over the merged label set; state names
/// must not collide. Composing two distinct systems is expressed by
/// composing their disjoint union with itself.
System disjoint_union(const System& a, const System& b);

} // namespace fts
