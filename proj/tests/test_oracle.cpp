#include "fixtures.hpp"

#include <doctest.h>

#include <set>

using namespace ultratree;

namespace {

std::set<PointSet> member_sets(const std::vector<Ball>& balls) {
    std::set<PointSet> out;
    for (const auto& b : balls) out.insert(b.members);
    return out;
}

} // namespace

TEST_CASE("oracle_open_balls agrees with open_balls on the fixtures") {
    for (const auto& s : {fixtures::quadruple(), fixtures::pyramid(), fixtures::triple(2, 1),
                          fixtures::one_point()}) {
        CHECK(member_sets(oracle_open_balls(s)) == member_sets(open_balls(s)));
    }
    CHECK(oracle_open_balls(fixtures::quadruple()).size() == 7);
}

TEST_CASE("oracle_is_ugvl agrees with is_ugvl on the fixtures") {
    CHECK_FALSE(oracle_is_ugvl(fixtures::quadruple()));
    CHECK(oracle_is_ugvl(fixtures::pyramid()));
    CHECK(oracle_is_ugvl(fixtures::triple(3, 1)));
    CHECK(oracle_is_ugvl(fixtures::one_point()));
}

TEST_CASE("random_space is seed-deterministic and within bounds") {
    RandomSpec spec;
    spec.seed = 2024;
    const auto a = random_space(spec);
    const auto b = random_space(spec);
    CHECK(a.same_matrix(b));

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        RandomSpec s;
        s.seed = seed;
        s.max_points = 6;
        const auto [space, shape] = random_space_with_shape(s);
        CHECK(space.size() >= 1);
        CHECK(space.size() <= 6);
        CHECK(validate_representing_shape(shape));
        CHECK(isometric(realize_space(shape), space));
    }
}

TEST_CASE("random_space label pool is honored") {
    RandomSpec spec;
    spec.seed = 5;
    spec.max_points = 8;
    spec.label_pool = {Rat(0), Rat(7) / 3};
    std::set<Rat> seen;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        spec.seed = seed;
        const auto s = random_space(spec);
        for (int i = 0; i < s.size(); ++i)
            for (int j = 0; j < s.size(); ++j) seen.insert(s.dist(i, j));
    }
    CHECK(seen == std::set<Rat>{Rat(0), Rat(7) / 3});
}

TEST_CASE("random_space rejects bad specs") {
    RandomSpec no_zero;
    no_zero.label_pool = {Rat(1), Rat(2)};
    RandomSpec dup;
    dup.label_pool = {Rat(0), Rat(1), Rat(1)};
    RandomSpec nonpos;
    nonpos.max_points = 0;
    for (const auto* spec : {&no_zero, &dup, &nonpos}) {
        try {
            random_space(*spec);
            FAIL("expected OracleError");
        } catch (const OracleError& e) {
            CHECK(e.kind == OracleError::Kind::BadSpec);
        }
    }
}

TEST_CASE("a zero-only pool fails once a multi-point space is drawn") {
    int too_small = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        RandomSpec spec;
        spec.seed = seed;
        spec.label_pool = {Rat(0)};
        try {
            const auto s = random_space(spec);
            CHECK(s.size() == 1); // only a singleton needs no positive label
        } catch (const OracleError& e) {
            CHECK(e.kind == OracleError::Kind::PoolTooSmall);
            ++too_small;
        }
    }
    CHECK(too_small > 0);
}

TEST_CASE("oracle_isometric agrees with isometric and is gated") {
    const auto q = fixtures::quadruple();
    const auto p = fixtures::pyramid();
    const auto permuted = UltraSpace::validate(
        {"a", "b", "c", "d"}, fixtures::to_matrix({{0, 1, 2, 2}, {1, 0, 2, 2}, {2, 2, 0, 1}, {2, 2, 1, 0}}));
    CHECK(oracle_isometric(q, permuted));
    CHECK_FALSE(oracle_isometric(q, p));
    CHECK_FALSE(oracle_isometric(fixtures::triple(2, 1), fixtures::triple(2, 2)));
    try {
        std::vector<std::string> names;
        std::vector<std::vector<Rat>> m(8, std::vector<Rat>(8, Rat(1)));
        for (int i = 0; i < 8; ++i) {
            names.push_back("d" + std::to_string(i));
            m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 0;
        }
        oracle_isometric(UltraSpace::validate(std::move(names), std::move(m)), q);
        FAIL("expected OracleError");
    } catch (const OracleError& e) {
        CHECK(e.kind == OracleError::Kind::InputTooLarge);
    }
}

TEST_CASE("a short property campaign passes") {
    CampaignConfig config;
    config.seed = 999;
    config.trials = 40;
    config.max_points = 6;
    for (const auto& r : run_campaign(config)) {
        INFO(r.name << ": " << r.first_failure);
        CHECK(r.fail == 0);
        CHECK(r.pass > 0);
    }
}
