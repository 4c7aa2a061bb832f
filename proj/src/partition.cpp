#include "fts/partition.hpp"

#include <algorithm>

namespace fts {

Partition Partition::whole(std::size_t n) {
    std::vector<std::uint32_t> ids(n, 0);
    return from_block_ids(ids);
}

Partition Partition::singletons(std::size_t n) {
    std::vector<std::uint32_t> ids(n);
    for (std::size_t s = 0; s < n; ++s) ids[s] = static_cast<std::uint32_t>(s);
    return from_block_ids(ids);
}

Partition Partition::from_block_ids(const std::vector<std::uint32_t>& block_of) {
    Partition p;
    p.block_of_.resize(block_of.size());
    std::vector<std::uint32_t> rename;
    const std::uint32_t unset = static_cast<std::uint32_t>(-1);
    for (StateId s = 0; s < block_of.size(); ++s) {
        const std::uint32_t raw = block_of[s];
        if (raw >= rename.size()) rename.resize(raw + 1, unset);
        if (rename[raw] == unset) {
            rename[raw] = static_cast<std::uint32_t>(p.blocks_.size());
            p.blocks_.emplace_back();
        }
        p.block_of_[s] = rename[raw];
        p.blocks_[rename[raw]].push_back(s);
    }
    return p;
}

} // namespace fts
