#pragma once

#include "fts/degree.hpp"
#include "fts/types.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace fts {

/// A possibility distribution (fuzzy subset) over a state universe.
///
/// Only the support is stored: entries are sorted by state and strictly
/// positive, so structural equality coincides with fuzzy-set equality and
/// the default-constructed value is the empty fuzzy set.
class Distribution {
public:
    using Entry = std::pair<StateId, Degree>;

    Distribution() = default;

    /// The singleton at s: degree 1 there, 0 elsewhere.
    static Distribution singleton(StateId s);

    /// Sorts, drops zero entries. Throws Error on a repeated state.
    static Distribution from_pairs(std::vector<Entry> entries);

    bool empty() const noexcept { return entries_.empty(); }
    std::size_t support_size() const noexcept { return entries_.size(); }

    Degree at(StateId s) const noexcept;

    /// Supremum of all degrees; 0 for the empty fuzzy set.
    Degree height() const noexcept;

    /// Supremum over the given states only.
    Degree height_over(std::span<const StateId> states) const noexcept;

    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

    friend bool operator==(const Distribution&, const Distribution&) = default;
    friend auto operator<=>(const Distribution&, const Distribution&) = default;

private:
    std::vector<Entry> entries_;
};

/// Scale product: pointwise min with c.
Distribution scale(Degree c, const Distribution& mu);

/// Fuzzy-set union: pointwise max.
Distribution join(const Distribution& mu, const Distribution& eta);

/// Distribution on the pair universe with degree min(mu(l), eta(r)) at the
/// pair state (l, r), encoded as l * right_universe + r.
Distribution meet_product(const Distribution& mu, const Distribution& eta,
                          std::size_t right_universe);

} // namespace fts
