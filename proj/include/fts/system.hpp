#pragma once

#include "fts/distribution.hpp"
#include "fts/types.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fts {

/// Unvalidated description of a transition system, as read from a file.
/// Degrees stay strings so parse errors can name their record.
struct RawTransition {
    std::string from;
    std::string label;
    std::vector<std::pair<std::string, std::string>> to; // state -> degree literal
};

struct RawSystem {
    std::vector<std::string> states;
    std::vector<std::string> labels;
    std::vector<RawTransition> transitions;
};

/// A finite nondeterministic fuzzy-transition system (S, A, delta).
///
/// delta maps each (state, label) to a set of possibility distributions;
/// the empty set means "no transition", which is distinct from a set
/// containing the empty distribution. Immutable after construction.
class System {
public:
    /// Checks the raw description: duplicate ids, unknown states/labels,
    /// degrees outside [0, 1]. Duplicate alternatives of one (state, label)
    /// are deduplicated with a warning.
    static Validated<System> validate(const RawSystem& raw);

    /// Assembles a system from already-consistent parts (composition,
    /// generators). Distribution sets are sorted and deduplicated here;
    /// supports must lie inside the state set.
    static System unchecked(std::vector<std::string> states,
                            std::vector<std::string> labels,
                            std::vector<std::vector<Distribution>> delta);

    std::size_t state_count() const noexcept { return states_.size(); }
    std::size_t label_count() const noexcept { return labels_.size(); }

    const std::vector<Distribution>& moves(StateId s, LabelId a) const noexcept {
        return delta_[s * labels_.size() + a];
    }

    const std::string& state_name(StateId s) const { return states_[s]; }
    const std::string& label_name(LabelId a) const { return labels_[a]; }
    const std::vector<std::string>& states() const noexcept { return states_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    std::optional<StateId> state_id(std::string_view name) const;
    std::optional<LabelId> label_id(std::string_view name) const;

    /// Distinct degrees occurring in any transition distribution, sorted.
    /// Every fixpoint iterate draws its values from this set plus {0, 1}.
    std::vector<Degree> degree_values() const;

private:
    System() = default;

    // name -> id, sorted by name for binary search
    using NameIndex = std::vector<std::pair<std::string, std::uint32_t>>;

    std::vector<std::string> states_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Distribution>> delta_; // (s * |A| + a) -> set
    NameIndex state_index_;
    NameIndex label_index_;
};

} // namespace fts
