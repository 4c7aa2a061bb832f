#pragma once

// Deterministic generators shared by the unit and acceptance suites.

#include "fts/degree.hpp"
#include "fts/distribution.hpp"
#include "fts/metric.hpp"
#include "fts/partition.hpp"
#include "fts/system.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gen {

using fts::Degree;
using fts::Distribution;
using fts::Partition;
using fts::StateId;
using fts::StateMetric;
using fts::System;

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::size_t below(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng);
    }
    bool chance(double p) { return std::uniform_real_distribution<>(0, 1)(eng) < p; }
};

/// 0, 1/4, 1/2, 3/4, 1.
inline const std::vector<Degree>& grid5() {
    static const std::vector<Degree> g = {
        Degree::zero(), Degree::ratio(1, 4), Degree::ratio(1, 2), Degree::ratio(3, 4),
        Degree::one()};
    return g;
}

/// 0, 1/2, 1.
inline const std::vector<Degree>& grid3() {
    static const std::vector<Degree> g = {Degree::zero(), Degree::ratio(1, 2),
                                          Degree::one()};
    return g;
}

inline std::vector<std::string> state_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i + 1));
    return names;
}

/// Every distribution over n states with degrees drawn from the grid
/// (|grid|^n of them, including the empty one).
inline std::vector<Distribution> all_distributions(std::size_t n,
                                                   const std::vector<Degree>& grid) {
    std::vector<Distribution> out;
    std::vector<std::size_t> pick(n, 0);
    for (;;) {
        std::vector<Distribution::Entry> entries;
        for (std::size_t s = 0; s < n; ++s)
            if (!grid[pick[s]].is_zero())
                entries.emplace_back(static_cast<StateId>(s), grid[pick[s]]);
        out.push_back(Distribution::from_pairs(std::move(entries)));
        std::size_t i = 0;
        while (i < n && ++pick[i] == grid.size()) pick[i++] = 0;
        if (i == n) break;
    }
    return out;
}

inline Distribution random_distribution(Rng& rng, std::size_t n,
                                        const std::vector<Degree>& grid,
                                        std::size_t max_support) {
    std::vector<Distribution::Entry> entries;
    const std::size_t want = rng.below(max_support + 1);
    for (std::size_t i = 0; i < want; ++i) {
        const StateId s = static_cast<StateId>(rng.below(n));
        const Degree d = grid[rng.below(grid.size())];
        if (!d.is_zero()) entries.emplace_back(s, d);
    }
    std::sort(entries.begin(), entries.end());
    entries.erase(std::unique(entries.begin(), entries.end(),
                              [](const auto& a, const auto& b) { return a.first == b.first; }),
                  entries.end());
    return Distribution::from_pairs(std::move(entries));
}

/// A random pseudo-ultrametric: random symmetric degrees closed under
/// minimax paths, which forces the strong triangle inequality exactly.
inline StateMetric random_ultrametric(Rng& rng, std::size_t n,
                                      const std::vector<Degree>& grid) {
    StateMetric d(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) d.set(i, j, grid[rng.below(grid.size())]);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                const Degree via = fts::max(d(i, k), d(k, j));
                if (via < d(i, j)) d.set(i, j, via);
            }
    return d;
}

inline System random_system(Rng& rng, std::size_t n, std::size_t labels,
                            std::size_t max_alternatives, const std::vector<Degree>& grid) {
    std::vector<std::string> label_names;
    for (std::size_t a = 0; a < labels; ++a)
        label_names.push_back(std::string(1, static_cast<char>('a' + a)));
    std::vector<std::vector<Distribution>> delta(n * labels);
    for (auto& set : delta) {
        const std::size_t alts = rng.below(max_alternatives + 1);
        for (std::size_t i = 0; i < alts; ++i)
            set.push_back(random_distribution(rng, n, grid, 3));
    }
    return System::unchecked(state_names(n), std::move(label_names), std::move(delta));
}

/// All partitions of {0, .., n-1}, via restricted growth strings.
inline std::vector<Partition> all_partitions(std::size_t n) {
    std::vector<Partition> out;
    std::vector<std::uint32_t> ids(n, 0);
    auto rec = [&](auto&& self, std::size_t s, std::uint32_t used) -> void {
        if (s == n) {
            out.push_back(Partition::from_block_ids(ids));
            return;
        }
        for (std::uint32_t b = 0; b <= used; ++b) {
            ids[s] = b;
            self(self, s + 1, b == used ? used + 1 : used);
        }
    };
    rec(rec, 0, 0);
    return out;
}

inline std::vector<std::pair<StateId, StateId>> partition_pairs(const Partition& p) {
    std::vector<std::pair<StateId, StateId>> pairs;
    for (StateId s = 0; s < p.size(); ++s)
        for (StateId t = 0; t < p.size(); ++t)
            if (p.same_block(s, t)) pairs.emplace_back(s, t);
    return pairs;
}

} // namespace gen
