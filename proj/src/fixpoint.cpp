#include "fts/fixpoint.hpp"

#include "fts/lifting.hpp"

#include <algorithm>
#include <span>

namespace fts {

namespace {

// The system-shape part of a delta application (distinct distributions and
// per-(state, label) membership) is fixed across the whole iteration; only
// the pairwise lifted distances depend on the current metric. Scratch
// vectors are reused, never shrunk.
struct DeltaContext {
    const System* sys = nullptr;
    std::size_t n = 0, labels = 0;
    std::vector<const Distribution*> pool;
    std::vector<std::uint32_t> member;  // pool index per set element, flat
    std::vector<std::uint32_t> offset;  // per (s,a), into member
    std::vector<Degree> lift;           // pool-pairwise lifted distances, memoized
    std::vector<std::uint8_t> computed; // which lift cells are filled
    const StateMetric* metric = nullptr;

    void bind(const System& system) {
        sys = &system;
        n = system.state_count();
        labels = system.label_count();

        pool.clear();
        for (StateId s = 0; s < n; ++s)
            for (LabelId a = 0; a < labels; ++a)
                for (const Distribution& dist : system.moves(s, a))
                    pool.push_back(&dist);
        auto by_value = [](const Distribution* x, const Distribution* y) {
            return *x < *y;
        };
        std::sort(pool.begin(), pool.end(), by_value);
        pool.erase(std::unique(pool.begin(), pool.end(),
                               [](const Distribution* x, const Distribution* y) {
                                   return *x == *y;
                               }),
                   pool.end());

        offset.assign(n * labels + 1, 0);
        member.clear();
        for (StateId s = 0; s < n; ++s)
            for (LabelId a = 0; a < labels; ++a) {
                for (const Distribution& dist : system.moves(s, a)) {
                    const auto it =
                        std::lower_bound(pool.begin(), pool.end(), &dist, by_value);
                    member.push_back(static_cast<std::uint32_t>(it - pool.begin()));
                }
                offset[s * labels + a + 1] = static_cast<std::uint32_t>(member.size());
            }
    }

    std::span<const std::uint32_t> set_of(StateId s, LabelId a) const {
        const std::size_t idx = s * labels + a;
        return {member.data() + offset[idx], offset[idx + 1] - offset[idx]};
    }

    Degree lifted_at(std::uint32_t a, std::uint32_t b) {
        if (a == b) return Degree::zero();
        const std::size_t width = pool.size();
        const std::size_t idx = a * width + b;
        if (!computed[idx]) {
            const Degree v = lifted_distance(*metric, *pool[a], *pool[b]);
            lift[idx] = lift[b * width + a] = v;
            computed[idx] = computed[b * width + a] = 1;
        }
        return lift[idx];
    }

    Degree hausdorff_indexed(std::span<const std::uint32_t> a_set,
                             std::span<const std::uint32_t> b_set) {
        if (a_set.empty() && b_set.empty()) return Degree::zero();
        if (a_set.size() == 1 && b_set.size() == 1) return lifted_at(a_set[0], b_set[0]);
        auto directed = [&](std::span<const std::uint32_t> from,
                            std::span<const std::uint32_t> to) {
            Degree worst;
            for (std::uint32_t a : from) {
                if (to.empty()) return Degree::one();
                Degree nearest = Degree::one();
                for (std::uint32_t b : to) nearest = min(nearest, lifted_at(a, b));
                worst = max(worst, nearest);
            }
            return worst;
        };
        return max(directed(a_set, b_set), directed(b_set, a_set));
    }

    // One delta application onto `out`, which must already have size n.
    void apply(const StateMetric& d, StateMetric& out) {
        const std::size_t width = pool.size();
        metric = &d;
        lift.assign(width * width, Degree::zero());
        computed.assign(width * width, 0);

        for (StateId s = 0; s < n; ++s)
            for (StateId t = s + 1; t < n; ++t) {
                Degree worst;
                for (LabelId a = 0; a < labels; ++a) {
                    worst = max(worst, hausdorff_indexed(set_of(s, a), set_of(t, a)));
                    if (worst.is_one()) break;
                }
                out.set(s, t, worst);
            }
    }
};

thread_local DeltaContext delta_ctx;

} // namespace

StateMetric delta_step(const System& sys, const StateMetric& d) {
    StateMetric out(sys.state_count());
    delta_ctx.bind(sys);
    delta_ctx.apply(d, out);
    return out;
}

FixpointRun behavioral_distance_run(const System& sys, bool trace) {
    const std::size_t n = sys.state_count();

    FixpointRun run;
    StateMetric cur(n), next(n);
    if (trace) run.iterates.push_back(cur);

    delta_ctx.bind(sys);
    std::size_t applications = 0;
    std::size_t bound = 0; // computed on demand; the chain ends long before
    for (;;) {
        delta_ctx.apply(cur, next);
        ++applications;
        if (!pointwise_leq(cur, next))
            throw Error("internal error: fixpoint iterate decreased; this is a bug");
        if (trace) run.iterates.push_back(next);
        if (next == cur) break;
        if (applications > 4) {
            if (bound == 0) bound = n * n * (sys.degree_values().size() + 2);
            if (applications > bound)
                throw Error("internal error: fixpoint iteration exceeded its bound of " +
                            std::to_string(bound) + " steps; this is a bug");
        }
        std::swap(cur, next);
    }

    run.metric = std::move(next);
    run.applications = applications;
    return run;
}

StateMetric behavioral_distance(const System& sys) {
    return behavioral_distance_run(sys).metric;
}

Partition quotient(const StateMetric& dist, Degree lambda) {
    const std::size_t n = dist.size();
    std::vector<std::uint32_t> ids(n, 0);
    std::vector<StateId> reps;
    for (StateId s = 0; s < n; ++s) {
        bool placed = false;
        for (std::size_t b = 0; b < reps.size(); ++b)
            if (dist(reps[b], s) <= lambda) {
                ids[s] = static_cast<std::uint32_t>(b);
                placed = true;
                break;
            }
        if (!placed) {
            ids[s] = static_cast<std::uint32_t>(reps.size());
            reps.push_back(s);
        }
    }
    return Partition::from_block_ids(ids);
}

Partition quotient(const System& sys, Degree lambda) {
    return quotient(behavioral_distance(sys), lambda);
}

std::vector<std::vector<Degree>> similarity(const System& sys) {
    const StateMetric d = behavioral_distance(sys);
    const std::size_t n = d.size();
    std::vector<std::vector<Degree>> s(n, std::vector<Degree>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i][j] = d(i, j).complement();
    return s;
}

namespace {

// Every alternative of s is matched by one of t with equal per-block
// heights, and vice versa.
bool moves_match(const System& sys, std::span<const std::uint32_t> block_of,
                 std::uint32_t blocks, StateId s, StateId t) {
    for (LabelId a = 0; a < sys.label_count(); ++a) {
        const auto& s_moves = sys.moves(s, a);
        const auto& t_moves = sys.moves(t, a);
        auto simulated = [&](const std::vector<Distribution>& from,
                             const std::vector<Distribution>& by) {
            for (const Distribution& mu : from) {
                bool found = false;
                for (const Distribution& eta : by)
                    if (class_heights_equal(block_of, blocks, mu, eta)) {
                        found = true;
                        break;
                    }
                if (!found) return false;
            }
            return true;
        };
        if (!simulated(s_moves, t_moves) || !simulated(t_moves, s_moves)) return false;
    }
    return true;
}

} // namespace

Partition greatest_bisimulation(const System& sys) {
    const std::size_t n = sys.state_count();
    std::vector<std::uint32_t> block_of(n, 0), refined(n);
    std::uint32_t blocks = 1;
    std::vector<StateId> reps;

    for (;;) {
        std::uint32_t next_id = 0;
        for (std::uint32_t b = 0; b < blocks; ++b) {
            reps.clear();
            for (StateId s = 0; s < n; ++s) {
                if (block_of[s] != b) continue;
                bool placed = false;
                for (StateId r : reps)
                    if (moves_match(sys, block_of, blocks, s, r)) {
                        refined[s] = refined[r];
                        placed = true;
                        break;
                    }
                if (!placed) {
                    refined[s] = next_id++;
                    reps.push_back(s);
                }
            }
        }
        if (next_id == blocks) return Partition::from_block_ids(block_of);
        block_of.swap(refined);
        blocks = next_id;
    }
}

StateMetric metric_from_relation(const std::vector<std::pair<StateId, StateId>>& relation,
                                 std::size_t n) {
    std::vector<bool> rel(n * n, false);
    for (const auto& [s, t] : relation) {
        if (s >= n || t >= n)
            throw Error("relation pair (" + std::to_string(s) + ", " + std::to_string(t) +
                        ") outside the state set");
        rel[s * n + t] = true;
    }
    for (std::size_t s = 0; s < n; ++s)
        if (!rel[s * n + s])
            throw Error("not an equivalence: missing reflexive pair (" +
                        std::to_string(s) + ", " + std::to_string(s) + ")");
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            if (rel[s * n + t] && !rel[t * n + s])
                throw Error("not an equivalence: (" + std::to_string(s) + ", " +
                            std::to_string(t) + ") lacks its symmetric pair");
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            for (std::size_t u = 0; u < n; ++u)
                if (rel[s * n + t] && rel[t * n + u] && !rel[s * n + u])
                    throw Error("not an equivalence: transitivity fails at (" +
                                std::to_string(s) + ", " + std::to_string(t) + ", " +
                                std::to_string(u) + ")");

    StateMetric d(n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = s + 1; t < n; ++t)
            if (!rel[s * n + t]) d.set(s, t, Degree::one());
    return d;
}

bool is_post_fixed_point(const System& sys, const StateMetric& d) {
    return pointwise_leq(delta_step(sys, d), d);
}

} // namespace fts
