#include "doctest.h"
#include "fixtures.hpp"
#include "torq/io.hpp"

using namespace torq;
using fx::v;
using nlohmann::json;

TEST_CASE("integer round trip incl. values beyond double precision") {
    Int big("123456789012345678901234567890");
    CHECK(io::int_from_json(io::int_to_json(big)) == big);
    CHECK(io::int_to_json(big).is_string());
    CHECK(io::int_to_json(Int(-7)).is_number_integer());
    CHECK(io::int_from_json(json("-42")) == -42);
    CHECK_THROWS_AS(io::int_from_json(json("zap")), error);
    CHECK_THROWS_AS(io::int_from_json(json(1.5)), error);
}

TEST_CASE("matrix round trip") {
    IntMatrix m(2, 3, {Int(1), Int(-2), Int(3), Int(0), Int(5), Int(-6)});
    CHECK(io::matrix_from_json(io::matrix_to_json(m)) == m);
    json bad = io::matrix_to_json(m);
    bad["rows"] = 5;
    CHECK_THROWS_AS(io::matrix_from_json(bad), error);
}

TEST_CASE("fan round trip") {
    for (const Fan& f : fx::corpus()) {
        Fan back = io::fan_from_json(io::fan_to_json(f));
        CHECK(back.same_fan(f));
    }
    json j = io::fan_to_json(fx::p2());
    j["rays"].push_back(io::vec_to_json(v({5, 7})));  // unused ray
    CHECK_THROWS_AS(io::fan_from_json(j), error);
}

TEST_CASE("divisor, triangle, ideal, presentation round trips") {
    WeilDivisor d(fx::p2(), v({1, -2, 3}));
    WeilDivisor d2 = io::divisor_from_json(io::divisor_to_json(d), ".");
    CHECK(d2.fan.same_fan(d.fan));
    CHECK(d2.coeffs == d.coeffs);

    Triangle t = cox_triangle(fx::p2());
    Triangle t2 = io::triangle_from_json(io::triangle_to_json(t), ".");
    CHECK(t2.phi1 == t.phi1);
    CHECK(t2.phi2 == t.phi2);

    MonomialIdeal i{{v({1, 0, 0}), v({0, 2, 0})}};
    CHECK(io::ideal_from_json(io::ideal_to_json(i)).generators == i.generators);

    QuotientPresentation qp = build_presentation(t);
    QuotientPresentation qp2 =
        io::presentation_from_json(io::presentation_to_json(qp), ".");
    CHECK(qp2.fan_map.source().same_fan(qp.fan_map.source()));
    CHECK(qp2.fan_map.matrix() == qp.fan_map.matrix());
}

TEST_CASE("serialization is byte deterministic") {
    QuotientPresentation qp = build_presentation(cox_triangle(fx::hz(1)));
    std::string a = io::dump_canonical(io::presentation_to_json(qp));
    QuotientPresentation qp2 = build_presentation(cox_triangle(fx::hz(1)));
    std::string b = io::dump_canonical(io::presentation_to_json(qp2));
    CHECK(a == b);
}

TEST_CASE("document kinds") {
    CHECK(io::document_kind(io::fan_to_json(fx::p1())) == "fan");
    CHECK_THROWS_AS(io::document_kind(json{{"kind", "widget"}}), error);
    CHECK_THROWS_AS(io::document_kind(json::array()), error);
}
