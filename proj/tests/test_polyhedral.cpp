#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"

using namespace torq;
using fx::v;

TEST_CASE("dual cones of pinned examples") {
    // expected values verified by mutual-containment oracle
    Cone quadrant(2, {v({1, 0}), v({0, 1})});
    CHECK(fx::oracle_same_cone(dual_cone(quadrant), quadrant));

    Cone c(2, {v({1, 0}), v({1, 2})});
    Cone expected(2, {v({0, 1}), v({2, -1})});
    CHECK(fx::oracle_same_cone(dual_cone(c), expected));

    // dual of the zero cone is everything
    Cone z = Cone::zero(2);
    CHECK(dual_cone(z).dim() == 2);
    CHECK(contains(dual_cone(z), v({-3, 5})));

    // halfplane: dual is a single ray
    Cone half(2, {v({1, 0}), v({-1, 0}), v({0, 1})});
    Cone ray(2, {v({0, 1})});
    CHECK(fx::oracle_same_cone(dual_cone(half), ray));
}

TEST_CASE("double dual identity on random cones") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::size_t> dim(1, 3), cnt(0, 4);
    std::uniform_int_distribution<int> e(-4, 4);
    for (int it = 0; it < 200; ++it) {
        std::size_t n = dim(rng);
        std::vector<Vec> gens(cnt(rng));
        for (Vec& g : gens) {
            g.resize(n);
            for (Int& x : g) x = e(rng);
        }
        Cone c(n, gens);
        Cone dd = dual_cone(dual_cone(c));
        REQUIRE(fx::oracle_same_cone(c, dd));
        for (const Vec& g : c.generators()) REQUIRE(contains(c, g));
        for (const Vec& m : c.inequalities())
            for (const Vec& g : c.generators()) REQUIRE(dot(m, g) >= 0);
    }
}

TEST_CASE("containment and relative interior") {
    Cone c(2, {v({1, 0}), v({1, 2})});
    CHECK(contains(c, v({1, 1})));
    CHECK(contains(c, v({2, 0})));
    CHECK(!contains(c, v({0, 1})));
    CHECK(relint_contains(c, v({1, 1})));
    CHECK(!relint_contains(c, v({1, 0})));
    CHECK(!relint_contains(c, v({0, 0})));
    CHECK(relint_contains(Cone::zero(2), v({0, 0})));
    CHECK(relint_contains(Cone(2, {v({1, 0})}), v({3, 0})));
}

TEST_CASE("faces of a simplicial cone") {
    Cone c(3, {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})});
    auto fs = faces(c);
    CHECK(fs.size() == 8);  // 2^3 faces of a simplicial 3-cone
    for (const Cone& f : fs) CHECK(is_face(f, c));
    Cone sq(3, {v({0, 0, 1}), v({1, 0, 1}), v({0, 1, 1}), v({1, 1, 1})});
    CHECK(faces(sq).size() == 10);  // 1 + 4 + 4 + 1
}

TEST_CASE("face_of and extreme rays") {
    Cone c(2, {v({1, 0}), v({0, 1})});
    Cone f = face_of(c, v({0, 1}));
    CHECK(fx::oracle_same_cone(f, Cone(2, {v({1, 0})})));
    CHECK_THROWS_AS(face_of(c, v({-1, 0})), error);

    Cone redundant(2, {v({1, 0}), v({1, 1}), v({0, 1})});
    auto ext = extreme_rays(redundant);
    REQUIRE(ext.size() == 2);
    CHECK(ext[0] == v({1, 0}));
    CHECK(ext[1] == v({0, 1}));
}

TEST_CASE("intersection") {
    Cone a(2, {v({1, 0}), v({0, 1})});
    Cone b(2, {v({1, 1}), v({-1, 1})});
    Cone expected(2, {v({1, 1}), v({0, 1})});
    CHECK(fx::oracle_same_cone(intersect(a, b), expected));
    CHECK(fx::oracle_same_cone(intersect(a, b), intersect(b, a)));
}

TEST_CASE("strong convexity") {
    CHECK(is_strongly_convex(Cone(2, {v({1, 0}), v({1, 2})})));
    CHECK(!is_strongly_convex(Cone(2, {v({1, 0}), v({-1, 0})})));
    CHECK(is_strongly_convex(Cone::zero(3)));
}

TEST_CASE("strict sign solutions against exhaustive oracle") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> e(-3, 3);
    std::uniform_int_distribution<std::size_t> nk(1, 3);
    for (int it = 0; it < 80; ++it) {
        std::size_t n = nk(rng) + 1, k = nk(rng);
        std::vector<Vec> lattice(k);
        for (Vec& g : lattice) {
            g.resize(n);
            for (Int& x : g) x = e(rng);
        }
        std::vector<std::size_t> zero_idx, pos_idx;
        for (std::size_t i = 0; i < n; ++i) {
            int r = e(rng);
            if (r > 0) pos_idx.push_back(i);
            else if (r < 0) zero_idx.push_back(i);
        }
        auto sol = strict_sign_solution(n, lattice, zero_idx, pos_idx);
        if (sol) {
            // returned vector must be in the lattice with the right signs
            REQUIRE(solve_integer(IntMatrix::from_cols(lattice), *sol)
                        .has_value());
            for (std::size_t i : zero_idx) REQUIRE((*sol)[i] == 0);
            for (std::size_t i : pos_idx) REQUIRE((*sol)[i] > 0);
        } else {
            // exhaustive combination scan within a coefficient box
            bool found = false;
            std::vector<int> coef(k, -6);
            for (;;) {
                Vec x(n, Int(0));
                for (std::size_t j = 0; j < k; ++j)
                    for (std::size_t i = 0; i < n; ++i)
                        x[i] += Int(coef[j]) * lattice[j][i];
                bool ok = true;
                for (std::size_t i : zero_idx)
                    if (x[i] != 0) ok = false;
                for (std::size_t i : pos_idx)
                    if (x[i] <= 0) ok = false;
                if (ok) {
                    found = true;
                    break;
                }
                std::size_t j = 0;
                while (j < k && coef[j] == 6) coef[j++] = -6;
                if (j == k) break;
                ++coef[j];
            }
            REQUIRE(!found);
        }
    }
}
