#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ultratree;

namespace {

UltraSpace discrete_space(int n) {
    std::vector<std::string> names;
    std::vector<std::vector<Rat>> m(static_cast<size_t>(n),
                                    std::vector<Rat>(static_cast<size_t>(n), Rat(1)));
    for (int i = 0; i < n; ++i) {
        names.push_back("d" + std::to_string(i));
        m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 0;
    }
    return UltraSpace::validate(std::move(names), std::move(m));
}

} // namespace

TEST_CASE("is_ugvl on the fixtures") {
    CHECK_FALSE(is_ugvl(fixtures::quadruple()));
    CHECK(is_ugvl(fixtures::pyramid()));
    CHECK(is_ugvl(fixtures::one_point()));
    CHECK(is_ugvl(fixtures::triple(2, 1)));
    CHECK(is_ugvl(fixtures::triple(3, 3)));
    CHECK(is_ugvl(discrete_space(6)));
}

TEST_CASE("generating_tree reproduces the space") {
    for (const auto& s : {fixtures::pyramid(), fixtures::triple(5, 3), fixtures::one_point(),
                          discrete_space(4)}) {
        const auto tree = generating_tree(s);
        CHECK(generates_ultrametric(tree));
        CHECK(space_from_tree(tree).same_matrix(s));
    }
}

TEST_CASE("generating_tree names the deficient ball of the quadruple") {
    try {
        generating_tree(fixtures::quadruple());
        FAIL("expected UgvlError");
    } catch (const UgvlError& e) {
        CHECK(e.kind == UgvlError::Kind::NotUGVL);
        CHECK(e.witness_ball == std::vector<std::string>{"x", "y", "z", "t"});
    }
}

TEST_CASE("delta counts deficient balls") {
    CHECK(delta(fixtures::quadruple()) == 1);
    CHECK(delta(fixtures::pyramid()) == 0);
    CHECK(delta(fixtures::one_point()) == 0);
    CHECK(delta(fixtures::triple(2, 1)) == 0);
}

TEST_CASE("minimal_extension of the quadruple is the pyramid") {
    const auto q = fixtures::quadruple();
    const auto ext = minimal_extension(q);
    CHECK(ext.extended.size() == 5);
    CHECK(ext.added.size() == 1);
    CHECK(ext.added[0].first == "w#1");
    CHECK(ext.added[0].second == std::vector<std::string>{"x", "y", "z", "t"});
    CHECK(ext.embedding == std::vector<int>{0, 1, 2, 3});
    CHECK(induced_subspace(ext.extended, {0, 1, 2, 3}).same_matrix(q));
    CHECK(is_ugvl(ext.extended));
    CHECK(isometric(ext.extended, fixtures::pyramid()));
    // the tie-break must not change the result up to isometry
    CHECK(isometric(minimal_extension(q, true).extended, ext.extended));
}

TEST_CASE("minimal_extension of a UGVL space is the space itself") {
    for (const auto& s : {fixtures::pyramid(), fixtures::triple(2, 1), fixtures::one_point()}) {
        const auto ext = minimal_extension(s);
        CHECK(ext.extended.same_matrix(s));
        CHECK(ext.added.empty());
    }
}

TEST_CASE("minimal_extension avoids clashing with existing names") {
    auto q = fixtures::quadruple();
    auto names = q.points();
    names[1] = "w#1";
    const auto clash = UltraSpace::validate(std::move(names), q.matrix());
    const auto ext = minimal_extension(clash);
    CHECK(ext.added[0].first == "w#1_");
    CHECK(is_ugvl(ext.extended));
}

TEST_CASE("is_ugvl_extension") {
    const auto q = fixtures::quadruple();
    const auto p = fixtures::pyramid();
    CHECK(is_ugvl_extension(p, q));
    CHECK(is_ugvl_extension(p, p));
    CHECK_FALSE(is_ugvl_extension(q, q));          // big is not UGVL
    CHECK_FALSE(is_ugvl_extension(fixtures::triple(2, 1), p)); // small is bigger
    CHECK_FALSE(is_ugvl_extension(p, fixtures::triple(5, 3))); // no such subset
    try {
        is_ugvl_extension(discrete_space(17), q);
        FAIL("expected UgvlError");
    } catch (const UgvlError& e) {
        CHECK(e.kind == UgvlError::Kind::InputTooLarge);
    }
}
