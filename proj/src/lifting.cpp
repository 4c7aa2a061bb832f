#include "fts/lifting.hpp"

#include <algorithm>

namespace fts {

Degree TransportMatrix::at(StateId s, StateId t) const noexcept {
    for (const Cell& c : cells)
        if (c.row == s && c.col == t) return c.value;
    return Degree::zero();
}

bool transport_feasible(const Distribution& mu, const Distribution& eta) {
    return mu.height() == eta.height();
}

TransportMatrix canonical_transport(const Distribution& mu, const Distribution& eta) {
    const Degree h = mu.height();
    if (h != eta.height())
        throw Error("transport infeasible: heights " + h.str() + " and " +
                    eta.height().str() + " differ");

    TransportMatrix x;
    if (mu.empty()) return x;

    // Entries are sorted by state, so the first hit is the tie-break winner.
    StateId s_star = 0, t_star = 0;
    for (const auto& [s, v] : mu)
        if (v == h) { s_star = s; break; }
    for (const auto& [t, v] : eta)
        if (v == h) { t_star = t; break; }

    for (const auto& [s, v] : mu) x.cells.push_back({s, t_star, v});
    for (const auto& [t, v] : eta)
        if (t != t_star) x.cells.push_back({s_star, t, v});
    return x;
}

bool satisfies_transport_constraints(const TransportMatrix& x, const Distribution& mu,
                                     const Distribution& eta) {
    for (const auto& cell : x.cells) {
        if (cell.value > min(mu.at(cell.row), eta.at(cell.col))) return false;
    }
    for (const auto& [s, v] : mu) {
        Degree row_max;
        for (const auto& cell : x.cells)
            if (cell.row == s) row_max = max(row_max, cell.value);
        if (row_max != v) return false;
    }
    for (const auto& [t, v] : eta) {
        Degree col_max;
        for (const auto& cell : x.cells)
            if (cell.col == t) col_max = max(col_max, cell.value);
        if (col_max != v) return false;
    }
    return true;
}

namespace {

// A value <= cap is achievable iff the maximal matrix, capped at `cap`
// wherever d exceeds it, still attains every row and column supremum.
bool cap_feasible(const StateMetric& d, const std::vector<Distribution::Entry>& rows,
                  const std::vector<Distribution::Entry>& cols, Degree cap) {
    for (const auto& [si, mi] : rows) {
        const bool uncapped = mi <= cap;
        bool attained = false;
        for (const auto& [tj, ej] : cols)
            if (ej >= mi && (uncapped || d(si, tj) <= cap)) {
                attained = true;
                break;
            }
        if (!attained) return false;
    }
    for (const auto& [tj, ej] : cols) {
        const bool uncapped = ej <= cap;
        bool attained = false;
        for (const auto& [si, mi] : rows)
            if (mi >= ej && (uncapped || d(si, tj) <= cap)) {
                attained = true;
                break;
            }
        if (!attained) return false;
    }
    return true;
}

} // namespace

bool lifted_distance_at_most(const StateMetric& d, const Distribution& mu,
                             const Distribution& eta, Degree c) {
    if (mu.height() != eta.height()) return c.is_one();
    if (mu.empty()) return true;
    return cap_feasible(d, mu.entries(), eta.entries(), c);
}

Degree lifted_distance(const StateMetric& d, const Distribution& mu,
                       const Distribution& eta) {
    if (mu.height() != eta.height()) return Degree::one();
    const auto& rows = mu.entries();
    const auto& cols = eta.entries();

    // The least feasible threshold of the capped-matrix test, in closed
    // form: row s becomes attainable once the cap reaches
    // min over {t : eta(t) >= mu(s)} of min(d(s,t), mu(s)), columns dually,
    // and the optimum is the largest of these per-line thresholds.
    Degree answer;
    for (const auto& [si, mi] : rows) {
        Degree need = Degree::one();
        for (const auto& [tj, ej] : cols)
            if (ej >= mi) {
                need = min(need, min(d(si, tj), mi));
                if (need.is_zero()) break;
            }
        answer = max(answer, need);
    }
    for (const auto& [tj, ej] : cols) {
        Degree need = Degree::one();
        for (const auto& [si, mi] : rows)
            if (mi >= ej) {
                need = min(need, min(d(si, tj), ej));
                if (need.is_zero()) break;
            }
        answer = max(answer, need);
    }
    return answer;
}

namespace {

// Exhaustive minimization over transport matrices with entries drawn from
// the finite value set; row-major recursion with branch-and-bound on the
// partial objective.
struct BruteSearch {
    const StateMetric* metric;
    const std::vector<Distribution::Entry>* rows;
    const std::vector<Distribution::Entry>* cols;
    std::vector<Degree> values; // {0} u {mu(s)} u {eta(t)}, sorted unique
    std::vector<Degree> col_max;
    Degree best = Degree::one();

    void run(std::size_t cell, Degree row_max, Degree objective) {
        const std::size_t k = cols->size();
        if (cell == rows->size() * k) {
            for (std::size_t j = 0; j < k; ++j)
                if (col_max[j] != (*cols)[j].second) return;
            best = min(best, objective);
            return;
        }
        const std::size_t i = cell / k, j = cell % k;
        const auto& [si, mi] = (*rows)[i];
        const auto& [tj, ej] = (*cols)[j];
        const Degree cap = min(mi, ej);
        const Degree dist = (*metric)(si, tj);
        for (const Degree v : values) {
            if (v > cap) break;
            const Degree obj2 = max(objective, min(dist, v));
            if (obj2 >= best) continue;
            if (j + 1 == k && max(row_max, v) != mi) continue; // row supremum missed
            const Degree saved = col_max[j];
            col_max[j] = max(col_max[j], v);
            run(cell + 1, j + 1 == k ? Degree::zero() : max(row_max, v), obj2);
            col_max[j] = saved;
        }
    }
};

} // namespace

Degree lifted_distance_bruteforce(const StateMetric& d, const Distribution& mu,
                                  const Distribution& eta, std::size_t max_support) {
    std::vector<StateId> support;
    for (const auto& [s, v] : mu) support.push_back(s);
    for (const auto& [t, v] : eta) support.push_back(t);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    if (support.size() > max_support)
        throw Error("brute-force oracle limited to " + std::to_string(max_support) +
                    " support states, got " + std::to_string(support.size()));

    if (mu.height() != eta.height()) return Degree::one();
    if (mu.empty()) return Degree::zero();

    BruteSearch search;
    search.metric = &d;
    search.rows = &mu.entries();
    search.cols = &eta.entries();
    search.values.push_back(Degree::zero());
    for (const auto& [s, v] : mu) search.values.push_back(v);
    for (const auto& [t, v] : eta) search.values.push_back(v);
    std::sort(search.values.begin(), search.values.end());
    search.values.erase(std::unique(search.values.begin(), search.values.end()),
                        search.values.end());
    search.col_max.assign(eta.support_size(), Degree::zero());
    // The objective never exceeds 1 and a solution exists whenever the
    // heights agree, so 1 is a sound initial bound.
    search.run(0, Degree::zero(), Degree::zero());
    return search.best;
}

bool class_heights_equal(std::span<const std::uint32_t> block_of, std::uint32_t blocks,
                         const Distribution& mu, const Distribution& eta) {
    thread_local std::vector<Degree> mu_heights, eta_heights;
    mu_heights.assign(blocks, Degree::zero());
    eta_heights.assign(blocks, Degree::zero());
    for (const auto& [s, v] : mu) {
        auto& h = mu_heights[block_of[s]];
        h = max(h, v);
    }
    for (const auto& [t, v] : eta) {
        auto& h = eta_heights[block_of[t]];
        h = max(h, v);
    }
    return mu_heights == eta_heights;
}

bool lifted_relation_contains(const Partition& partition, const Distribution& mu,
                              const Distribution& eta) {
    return class_heights_equal(partition.block_ids(),
                               static_cast<std::uint32_t>(partition.block_count()), mu,
                               eta);
}

bool weight_function_exists(const std::vector<std::pair<StateId, StateId>>& relation,
                            const Distribution& mu, const Distribution& eta) {
    // The maximal candidate w(s,t) = min(mu(s), eta(t)) on relation pairs
    // dominates every admissible weight function, so testing the suprema on
    // it decides existence.
    auto attains = [&](const Distribution& along, const Distribution& other, bool row_side) {
        for (const auto& [s, v] : along) {
            bool ok = false;
            for (const auto& [a, b] : relation) {
                const StateId here = row_side ? a : b;
                const StateId there = row_side ? b : a;
                if (here == s && other.at(there) >= v) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
        return true;
    };
    return attains(mu, eta, true) && attains(eta, mu, false);
}

} // namespace fts
