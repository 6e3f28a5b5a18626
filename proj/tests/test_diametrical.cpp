#include "fixtures.hpp"

#include <doctest.h>

using namespace ultratree;

TEST_CASE("diametral partition of the quadruple") {
    const auto partition = diametral_partition(fixtures::quadruple());
    CHECK(partition.space_diameter == 2);
    CHECK(partition.parts == std::vector<PointSet>{{0, 2}, {1, 3}});
    CHECK_FALSE(has_singleton_part(partition));
}

TEST_CASE("diametral partition of the pyramid has the singleton {w}") {
    const auto partition = diametral_partition(fixtures::pyramid());
    CHECK(partition.parts == std::vector<PointSet>{{0, 2}, {1, 3}, {4}});
    CHECK(has_singleton_part(partition));
}

TEST_CASE("diametral partition of triples and two-point spaces") {
    const auto t = diametral_partition(fixtures::triple(2, 1));
    CHECK(t.parts == std::vector<PointSet>{{0, 2}, {1}});

    const auto two = diametral_partition(
        UltraSpace::validate({"a", "b"}, fixtures::to_matrix({{0, 5}, {5, 0}})));
    CHECK(two.parts == std::vector<PointSet>{{0}, {1}});
    CHECK(two.space_diameter == 5);

    const auto discrete = diametral_partition(fixtures::triple(3, 3));
    CHECK(discrete.parts.size() == 3);
}

TEST_CASE("diametral partition needs at least two points") {
    try {
        diametral_partition(fixtures::one_point());
        FAIL("expected SubsetError");
    } catch (const SubsetError& e) {
        CHECK(e.kind == SubsetError::Kind::TooSmall);
    }
}

TEST_CASE("singleton part coincides with the space being a centered sphere") {
    for (const auto& s : {fixtures::quadruple(), fixtures::pyramid(), fixtures::triple(2, 1),
                          fixtures::triple(3, 3)}) {
        CHECK(has_singleton_part(diametral_partition(s)) ==
              centered_sphere_center(s, s.all_points()).has_value());
    }
}

TEST_CASE("every diametral part is an open ball") {
    for (const auto& s : {fixtures::quadruple(), fixtures::pyramid(), fixtures::triple(5, 2)}) {
        const auto balls = open_balls(s);
        for (const auto& part : diametral_partition(s).parts) {
            const Ball as_ball{part, diameter(s, part)};
            CHECK(std::find(balls.begin(), balls.end(), as_ball) != balls.end());
        }
    }
}
