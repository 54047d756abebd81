#include "doctest.h"
#include "fixtures.hpp"

using namespace torq;
using fx::v;

TEST_CASE("face closure cone counts") {
    CHECK(fx::p1().num_cones() == 3);   // {0}, two rays
    CHECK(fx::p2().num_cones() == 7);   // {0}, 3 rays, 3 two-cones
    CHECK(fx::hz(1).num_cones() == 9);  // {0}, 4 rays, 4 two-cones
    CHECK(fx::amu2().num_cones() == 4);
    CHECK(fx::qcone().num_cones() == 10);  // {0}, 4 rays, 4 facets, top
    CHECK(fx::p1xp1().num_cones() == 9);
}

TEST_CASE("canonical ray order is descending lexicographic") {
    Fan f = fx::p2();
    REQUIRE(f.num_rays() == 3);
    CHECK(f.rays()[0] == v({1, 0}));
    CHECK(f.rays()[1] == v({0, 1}));
    CHECK(f.rays()[2] == v({-1, -1}));
    CHECK(fx::p1().rays()[0] == v({1}));
    CHECK(fx::p1().rays()[1] == v({-1}));
}

TEST_CASE("new_fan rejects bad input") {
    CHECK_THROWS_AS(new_fan(2, {Cone(2, {v({1, 0}), v({-1, 0})})}), error);
    // overlapping cones
    CHECK_THROWS_AS(new_fan(2, {Cone(2, {v({1, 0}), v({0, 1})}),
                                Cone(2, {v({1, 1}), v({-1, 1})})}),
                    error);
    CHECK_THROWS_AS(new_fan(2, {Cone(3, {v({1, 0, 0})})}), error);
}

TEST_CASE("completeness") {
    CHECK(is_complete(fx::p1()));
    CHECK(is_complete(fx::p2()));
    CHECK(is_complete(fx::hz(1)));
    CHECK(is_complete(fx::hz(3)));
    CHECK(is_complete(fx::p1xp1()));
    CHECK(!is_complete(fx::amu2()));
    CHECK(!is_complete(fx::qcone()));
    // punctured plane: three rays, no two-cones
    Fan rays_only = new_fan(
        2, {Cone(2, {v({1, 0})}), Cone(2, {v({0, 1})}), Cone(2, {v({-1, -1})})});
    CHECK(!is_complete(rays_only));
}

TEST_CASE("smallest containing cone") {
    Fan f = fx::p2();
    CHECK(smallest_containing_cone(f, v({2, 3})).dim() == 2);
    CHECK(smallest_containing_cone(f, v({5, 0})).generators() ==
          std::vector<Vec>{v({1, 0})});
    CHECK(smallest_containing_cone(f, v({0, 0})).dim() == 0);
    Fan a = fx::amu2();
    CHECK_THROWS_AS(smallest_containing_cone(a, v({-1, 0})), error);
}

TEST_CASE("enclosing face fan") {
    CHECK(enclosing_face_fan(fx::amu2()).has_value());
    CHECK(enclosing_face_fan(fx::qcone()).has_value());
    CHECK(!enclosing_face_fan(fx::p2()).has_value());  // hull not convexly faced
    CHECK(!enclosing_face_fan(fx::p1()).has_value());
    // two rays spanning a quadrant: both are faces of the hull
    Fan sub = new_fan(2, {Cone(2, {v({1, 0})}), Cone(2, {v({0, 1})})});
    CHECK(enclosing_face_fan(sub).has_value());
    // but a ray interior to the hull is not a face of it
    Fan bad = new_fan(2, {Cone(2, {v({1, 0})}), Cone(2, {v({1, 1})}),
                          Cone(2, {v({0, 1})})});
    CHECK(!enclosing_face_fan(bad).has_value());
}

TEST_CASE("fan maps") {
    Fan src = fx::p1xp1();
    Fan tgt = fx::p2();
    // projection (x, y) -> x + ... does not map every cone into a cone
    IntMatrix bad(2, 2, {Int(1), Int(0), Int(0), Int(-1)});
    CHECK_THROWS_AS(new_fan_map(bad, src, tgt), error);
    FanMap id = new_fan_map(IntMatrix::identity(2), src, src);
    CHECK(id.source().same_fan(id.target()));
}
