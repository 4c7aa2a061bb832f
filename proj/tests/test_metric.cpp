#include "fts/metric.hpp"

#include "doctest.h"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using fts::Degree;
using fts::StateMetric;

namespace {

std::vector<std::vector<Degree>> full(std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<std::vector<Degree>> m;
    for (const auto& row : rows) {
        m.emplace_back();
        for (const char* v : row) m.back().push_back(*Degree::parse(v));
    }
    return m;
}

} // namespace

TEST_CASE("discrete and all-zero matrices validate") {
    const std::vector<std::string> names{"s", "t"};
    CHECK(fts::validate_metric(full({{"0", "1"}, {"1", "0"}}), names).ok());
    CHECK(fts::validate_metric(full({{"0", "0"}, {"0", "0"}}), names).ok());
}

TEST_CASE("axiom violations come back with witnesses") {
    const std::vector<std::string> names{"s", "t", "u"};

    auto p3 = fts::validate_metric(
        full({{"0", "0.2", "0.5"}, {"0.2", "0", "0.2"}, {"0.5", "0.2", "0"}}), names);
    REQUIRE_FALSE(p3.ok());
    CHECK(p3.errors[0].message.find("P3") != std::string::npos);
    CHECK(p3.errors[0].message.find("(s, t, u)") != std::string::npos);

    auto p1 = fts::validate_metric(
        full({{"0.1", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}}), names);
    REQUIRE_FALSE(p1.ok());
    CHECK(p1.errors[0].message.find("P1") != std::string::npos);

    auto p2 = fts::validate_metric(
        full({{"0", "0.4", "0"}, {"0.3", "0", "0"}, {"0", "0", "0"}}), names);
    REQUIRE_FALSE(p2.ok());
    CHECK(p2.errors[0].message.find("P2") != std::string::npos);
}

TEST_CASE("acceptance matches the axioms on every 3-state grid matrix") {
    const std::vector<std::string> names{"s", "t", "u"};
    const auto& grid = gen::grid3();
    std::vector<std::size_t> pick(9, 0);
    std::size_t agreements = 0;
    for (;;) {
        std::vector<std::vector<Degree>> m(3, std::vector<Degree>(3));
        for (std::size_t c = 0; c < 9; ++c) m[c / 3][c % 3] = grid[pick[c]];
        const bool expected = oracle::is_pseudo_ultrametric(m);
        CHECK(fts::validate_metric(m, names).ok() == expected);
        ++agreements;
        std::size_t i = 0;
        while (i < 9 && ++pick[i] == grid.size()) pick[i++] = 0;
        if (i == 9) break;
    }
    CHECK(agreements == 19683); // 3^9 matrices
}

TEST_CASE("metric storage round trips through pair access") {
    StateMetric d(3);
    d.set(0, 1, *Degree::parse("0.4"));
    d.set(2, 1, *Degree::parse("0.7"));
    CHECK(d(1, 0) == *Degree::parse("0.4"));
    CHECK(d(1, 2) == *Degree::parse("0.7"));
    CHECK(d(2, 2).is_zero());
    CHECK_THROWS_AS(d.set(1, 1, Degree::one()), fts::Error);
}

TEST_CASE("pointwise order and max behave on random ultrametrics") {
    gen::Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = gen::random_ultrametric(rng, 4, gen::grid5());
        const auto b = gen::random_ultrametric(rng, 4, gen::grid5());
        const auto m = pointwise_max(a, b);
        CHECK(pointwise_leq(a, m));
        CHECK(pointwise_leq(b, m));
        // the pointwise max of two pseudo-ultrametrics is one again
        std::vector<std::vector<Degree>> as_matrix(4, std::vector<Degree>(4));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) as_matrix[i][j] = m(i, j);
        CHECK(oracle::is_pseudo_ultrametric(as_matrix));
    }
}
