#pragma once

#include "fts/types.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fts {

/// Disjoint nonempty blocks covering {0, .., n-1}, in canonical form:
/// blocks ordered by least member, members sorted within each block.
class Partition {
public:
    Partition() = default;

    static Partition whole(std::size_t n);
    static Partition singletons(std::size_t n);

    /// Builds from an arbitrary state -> block-id assignment; block ids are
    /// renumbered by first occurrence so equal partitions compare equal.
    static Partition from_block_ids(const std::vector<std::uint32_t>& block_of);

    std::size_t size() const noexcept { return block_of_.size(); }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    std::uint32_t block_of(StateId s) const noexcept { return block_of_[s]; }
    bool same_block(StateId s, StateId t) const noexcept {
        return block_of_[s] == block_of_[t];
    }
    const std::vector<std::vector<StateId>>& blocks() const noexcept { return blocks_; }
    const std::vector<std::uint32_t>& block_ids() const noexcept { return block_of_; }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::vector<StateId>> blocks_;
    std::vector<std::uint32_t> block_of_;
};

} // namespace fts
