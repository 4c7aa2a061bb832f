#include "fts/lifting.hpp"

#include "doctest.h"
#include "fts/fixpoint.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using fts::Degree;
using fts::Distribution;
using fts::StateId;
using fts::StateMetric;

namespace {

Degree deg(const char* text) { return *Degree::parse(text); }

Distribution dist(std::vector<std::pair<StateId, const char*>> entries) {
    std::vector<Distribution::Entry> parsed;
    for (const auto& [s, text] : entries) parsed.emplace_back(s, deg(text));
    return Distribution::from_pairs(std::move(parsed));
}

// The two-state pair family: mu = 0.9/s + 0.3/t, eta = 1/s + 0.5/t,
// theta = 0.9/s + 0.5/t.
const Distribution mu = dist({{0, "0.9"}, {1, "0.3"}});
const Distribution eta = dist({{0, "1"}, {1, "0.5"}});
const Distribution theta = dist({{0, "0.9"}, {1, "0.5"}});

} // namespace

TEST_CASE("transport solvability is height equality") {
    CHECK_FALSE(fts::transport_feasible(mu, eta));
    CHECK(fts::transport_feasible(mu, theta));
    CHECK(fts::transport_feasible(Distribution(), Distribution()));

    SUBCASE("confirmed by exhaustive search over the value set") {
        const auto pool = gen::all_distributions(2, gen::grid5());
        for (const auto& a : pool)
            for (const auto& b : pool)
                CHECK(fts::transport_feasible(a, b) == oracle::transport_exists(a, b));
    }
    SUBCASE("and at three states on random pairs") {
        gen::Rng rng(23);
        for (int trial = 0; trial < 300; ++trial) {
            const auto a = gen::random_distribution(rng, 3, gen::grid5(), 3);
            const auto b = gen::random_distribution(rng, 3, gen::grid5(), 3);
            CHECK(fts::transport_feasible(a, b) == oracle::transport_exists(a, b));
        }
    }
}

TEST_CASE("the constructive solution") {
    const auto x = fts::canonical_transport(mu, theta);
    CHECK(x.at(0, 0) == deg("0.9"));
    CHECK(x.at(0, 1) == deg("0.5"));
    CHECK(x.at(1, 0) == deg("0.3"));
    CHECK(x.at(1, 1).is_zero());
    CHECK(fts::satisfies_transport_constraints(x, mu, theta));

    SUBCASE("identity transport solves the self pair") {
        const auto self = fts::canonical_transport(mu, mu);
        CHECK(self.at(0, 0) == deg("0.9"));
        CHECK(self.at(1, 0) == deg("0.3")); // column of the height state carries mu
        CHECK(self.at(0, 1) == deg("0.3")); // row of the height state carries it back
        CHECK(self.at(1, 1).is_zero());
        CHECK(fts::satisfies_transport_constraints(self, mu, mu));
    }
    SUBCASE("a singleton self pair degenerates to the diagonal") {
        const auto single = dist({{1, "0.7"}});
        const auto self = fts::canonical_transport(single, single);
        REQUIRE(self.cells.size() == 1);
        CHECK(self.at(1, 1) == deg("0.7"));
    }
    SUBCASE("empty pair gives the empty matrix") {
        CHECK(fts::canonical_transport(Distribution(), Distribution()).cells.empty());
    }
    SUBCASE("height mismatch throws") {
        CHECK_THROWS_AS(fts::canonical_transport(mu, eta), fts::Error);
    }
    SUBCASE("constraints hold on random feasible pairs") {
        gen::Rng rng(5);
        int checked = 0;
        while (checked < 200) {
            const auto a = gen::random_distribution(rng, 4, gen::grid5(), 4);
            const auto b = gen::random_distribution(rng, 4, gen::grid5(), 4);
            if (!fts::transport_feasible(a, b)) continue;
            CHECK(fts::satisfies_transport_constraints(fts::canonical_transport(a, b), a, b));
            ++checked;
        }
    }
}

TEST_CASE("lifted distances under the discrete metric") {
    const StateMetric d = StateMetric::discrete(2);
    CHECK(fts::lifted_distance(d, mu, eta) == Degree::one());
    CHECK(fts::lifted_distance(d, eta, mu) == Degree::one());
    CHECK(fts::lifted_distance(d, mu, theta) == deg("0.5"));
    CHECK(fts::lifted_distance(d, theta, mu) == deg("0.5"));
    CHECK(fts::lifted_distance(d, eta, theta) == Degree::one());
    CHECK(fts::lifted_distance(d, mu, mu).is_zero());
    CHECK(fts::lifted_distance(d, eta, eta).is_zero());
    CHECK(fts::lifted_distance(d, theta, theta).is_zero());

    SUBCASE("the all-zero metric collapses every feasible pair") {
        const StateMetric top(2);
        CHECK(fts::lifted_distance(top, mu, theta).is_zero());
        CHECK(fts::lifted_distance(top, mu, eta) == Degree::one()); // still infeasible
    }
}

TEST_CASE("threshold solver agrees with the brute-force oracle") {
    const StateMetric discrete = StateMetric::discrete(2);
    CHECK(fts::lifted_distance_bruteforce(discrete, mu, theta) == deg("0.5"));
    CHECK(fts::lifted_distance_bruteforce(discrete, mu, eta) == Degree::one());
    CHECK(fts::lifted_distance_bruteforce(discrete, mu, mu).is_zero());

    gen::Rng rng(29);
    for (int trial = 0; trial < 1500; ++trial) {
        const auto a = gen::random_distribution(rng, 3, gen::grid5(), 3);
        const auto b = gen::random_distribution(rng, 3, gen::grid5(), 3);
        const auto d = gen::random_ultrametric(rng, 3, gen::grid5());
        CHECK(fts::lifted_distance(d, a, b) == fts::lifted_distance_bruteforce(d, a, b));
    }
    SUBCASE("oracle rejects instances above its size bound") {
        std::vector<Distribution::Entry> wide;
        for (StateId s = 0; s < 6; ++s) wide.emplace_back(s, Degree::one());
        const auto big = Distribution::from_pairs(std::move(wide));
        CHECK_THROWS_AS(fts::lifted_distance_bruteforce(StateMetric::discrete(6), big, big),
                        fts::Error);
    }
}

TEST_CASE("threshold decision is sound for every candidate") {
    gen::Rng rng(31);
    for (int trial = 0; trial < 400; ++trial) {
        const auto a = gen::random_distribution(rng, 3, gen::grid5(), 3);
        const auto b = gen::random_distribution(rng, 3, gen::grid5(), 3);
        const auto d = gen::random_ultrametric(rng, 3, gen::grid5());
        const Degree brute = fts::lifted_distance_bruteforce(d, a, b);
        for (const Degree c : gen::grid5())
            CHECK(fts::lifted_distance_at_most(d, a, b, c) == (brute <= c));
    }
}

TEST_CASE("the lifting is a pseudo-ultrametric") {
    gen::Rng rng(37);
    for (int trial = 0; trial < 400; ++trial) {
        const auto d = gen::random_ultrametric(rng, 4, gen::grid5());
        const auto a = gen::random_distribution(rng, 4, gen::grid5(), 4);
        const auto b = gen::random_distribution(rng, 4, gen::grid5(), 4);
        const auto c = gen::random_distribution(rng, 4, gen::grid5(), 4);
        CHECK(fts::lifted_distance(d, a, a).is_zero());
        CHECK(fts::lifted_distance(d, a, b) == fts::lifted_distance(d, b, a));
        CHECK(fts::lifted_distance(d, a, c) <=
              fts::max(fts::lifted_distance(d, a, b), fts::lifted_distance(d, b, c)));
    }
}

TEST_CASE("widening the metric can only widen the lifting") {
    gen::Rng rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const auto d2 = gen::random_ultrametric(rng, 4, gen::grid5());
        const auto d1 = pointwise_max(d2, gen::random_ultrametric(rng, 4, gen::grid5()));
        const auto a = gen::random_distribution(rng, 4, gen::grid5(), 4);
        const auto b = gen::random_distribution(rng, 4, gen::grid5(), 4);
        CHECK(fts::lifted_distance(d1, a, b) >= fts::lifted_distance(d2, a, b));
    }
}

TEST_CASE("Hausdorff lift") {
    const StateMetric d = StateMetric::discrete(2);
    auto dist_fn = [&](const Distribution& a, const Distribution& b) {
        return fts::lifted_distance(d, a, b);
    };
    const std::vector<Distribution> none;
    const std::vector<Distribution> just_mu{mu};
    const std::vector<Distribution> just_theta{theta};
    const std::vector<Distribution> mu_theta{mu, theta};
    const std::vector<Distribution> mu_eta{mu, eta};
    CHECK(fts::hausdorff(none, none, dist_fn).is_zero());
    CHECK(fts::hausdorff(just_mu, none, dist_fn) == Degree::one());
    CHECK(fts::hausdorff(none, just_mu, dist_fn) == Degree::one());
    CHECK(fts::hausdorff(just_mu, just_theta, dist_fn) == deg("0.5"));
    CHECK(fts::hausdorff(mu_theta, just_theta, dist_fn) == deg("0.5"));
    CHECK(fts::hausdorff(mu_eta, mu_eta, dist_fn).is_zero());
}

TEST_CASE("relation lifting over a partition") {
    const auto singletons = fts::Partition::singletons(2);
    const auto whole = fts::Partition::whole(2);
    CHECK(fts::lifted_relation_contains(singletons, mu, mu));
    CHECK_FALSE(fts::lifted_relation_contains(singletons, mu, theta));
    CHECK(fts::lifted_relation_contains(whole, mu, theta)); // both heights 0.9
    CHECK_FALSE(fts::lifted_relation_contains(whole, mu, eta));
}

TEST_CASE("weight functions") {
    const std::vector<std::pair<StateId, StateId>> identity{{0, 0}, {1, 1}};
    CHECK(fts::weight_function_exists(identity, mu, mu));
    CHECK_FALSE(fts::weight_function_exists({}, mu, mu));
    CHECK(fts::weight_function_exists({}, Distribution(), Distribution()));

    SUBCASE("equivalence relations reduce to per-class heights") {
        for (std::size_t n : {2u, 3u}) {
            const auto pool = gen::all_distributions(n, gen::grid3());
            for (const auto& p : gen::all_partitions(n)) {
                const auto pairs = gen::partition_pairs(p);
                for (const auto& a : pool)
                    for (const auto& b : pool)
                        CHECK(fts::weight_function_exists(pairs, a, b) ==
                              fts::lifted_relation_contains(p, a, b));
            }
        }
    }
    SUBCASE("and at four states on random pairs") {
        gen::Rng rng(43);
        const auto partitions = gen::all_partitions(4);
        for (int trial = 0; trial < 300; ++trial) {
            const auto& p = partitions[rng.below(partitions.size())];
            const auto a = gen::random_distribution(rng, 4, gen::grid3(), 4);
            const auto b = gen::random_distribution(rng, 4, gen::grid3(), 4);
            CHECK(fts::weight_function_exists(gen::partition_pairs(p), a, b) ==
                  fts::lifted_relation_contains(p, a, b));
        }
    }
}

TEST_CASE("zero lifted distance under a relation metric is relation lifting") {
    gen::Rng rng(47);
    const auto partitions = gen::all_partitions(3);
    for (const auto& p : partitions) {
        const auto d_r = fts::metric_from_relation(gen::partition_pairs(p), 3);
        for (int trial = 0; trial < 60; ++trial) {
            const auto a = gen::random_distribution(rng, 3, gen::grid5(), 3);
            const auto b = gen::random_distribution(rng, 3, gen::grid5(), 3);
            CHECK(fts::weight_function_exists(gen::partition_pairs(p), a, b) ==
                  fts::lifted_distance(d_r, a, b).is_zero());
        }
    }
}
