#include "doctest.h"
#include "fixtures.hpp"

using namespace torq;
using fx::v;

TEST_CASE("smith normal form of pinned matrices") {
    auto diag_of = [](const IntMatrix& a) {
        SmithDecomposition s = smith_normal_form(a);
        REQUIRE(s.left * a * s.right == s.diag);
        std::vector<Int> d;
        for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
            if (s.d(i) != 0) d.push_back(s.d(i));
        return d;
    };
    CHECK(diag_of(IntMatrix(2, 2, {Int(2), Int(4), Int(6), Int(8)})) ==
          std::vector<Int>{Int(2), Int(4)});
    CHECK(diag_of(IntMatrix(2, 2, {Int(2), Int(0), Int(0), Int(3)})) ==
          std::vector<Int>{Int(1), Int(6)});
    CHECK(diag_of(IntMatrix::identity(3)) ==
          std::vector<Int>{Int(1), Int(1), Int(1)});
    CHECK(diag_of(IntMatrix(2, 3)) == std::vector<Int>{});
}

TEST_CASE("smith normal form properties on random instances") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int it = 0; it < 200; ++it) {
        IntMatrix a = fx::random_matrix(rng, dim(rng), dim(rng), 10);
        SmithDecomposition s = smith_normal_form(a);
        REQUIRE(s.left * a * s.right == s.diag);
        Int dl = determinant(s.left), dr = determinant(s.right);
        REQUIRE((dl == 1 || dl == -1));
        REQUIRE((dr == 1 || dr == -1));
        std::vector<Int> diag;
        for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) {
            Int d = s.d(i);
            REQUIRE(d >= 0);
            if (!diag.empty() && diag.back() != 0 && d != 0)
                REQUIRE(d % diag.back() == 0);
            if (!diag.empty() && diag.back() == 0) REQUIRE(d == 0);
            diag.push_back(d);
        }
        // independent minors-gcd oracle
        std::vector<Int> nonzero;
        for (const Int& d : diag)
            if (d != 0) nonzero.push_back(d);
        REQUIRE(nonzero == fx::oracle_snf_diag(a));
    }
}

TEST_CASE("determinant and rank") {
    CHECK(determinant(IntMatrix(2, 2, {Int(1), Int(2), Int(3), Int(4)})) == -2);
    CHECK(determinant(IntMatrix::identity(4)) == 1);
    std::mt19937_64 rng(99);
    for (int it = 0; it < 50; ++it) {
        IntMatrix a = fx::random_matrix(rng, 3, 3, 8);
        // cofactor expansion oracle
        auto m2 = [&](std::size_t i0, std::size_t i1, std::size_t j0,
                      std::size_t j1) {
            return a.at(i0, j0) * a.at(i1, j1) - a.at(i0, j1) * a.at(i1, j0);
        };
        Int d = a.at(0, 0) * m2(1, 2, 1, 2) - a.at(0, 1) * m2(1, 2, 0, 2) +
                a.at(0, 2) * m2(1, 2, 0, 1);
        CHECK(determinant(a) == d);
        CHECK(rank(a) == (d != 0 ? 3 : rank(a)));
    }
}

TEST_CASE("integer and rational solving") {
    IntMatrix two(1, 1, {Int(2)});
    CHECK(!solve_integer(two, v({1})).has_value());
    auto q = solve_rational(two, v({1}));
    REQUIRE(q.has_value());
    CHECK((*q)[0] == Rat(1, 2));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int it = 0; it < 100; ++it) {
        std::size_t r = dim(rng), c = dim(rng);
        IntMatrix a = fx::random_matrix(rng, r, c, 6);
        Vec x(c);
        std::uniform_int_distribution<int> e(-5, 5);
        for (Int& xi : x) xi = e(rng);
        Vec b = a * x;
        auto sol = solve_integer(a, b);
        REQUIRE(sol.has_value());
        CHECK(a * *sol == b);
    }
}

TEST_CASE("kernel basis is saturated") {
    auto k = kernel_basis(IntMatrix(1, 2, {Int(2), Int(4)}));
    REQUIRE(k.size() == 1);
    CHECK(is_primitive(k[0]));
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int it = 0; it < 60; ++it) {
        IntMatrix a = fx::random_matrix(rng, dim(rng), dim(rng), 7);
        auto ker = kernel_basis(a);
        CHECK(ker.size() == a.cols() - rank(a));
        for (const Vec& kv : ker) CHECK(is_zero_vec(a * kv));
        if (!ker.empty()) {
            // saturation: any integer solution of A x = 0 solves over the basis
            Vec probe(a.cols(), Int(0));
            for (const Vec& kv : ker) probe = add(probe, kv);
            CHECK(solve_integer(IntMatrix::from_cols(ker), probe).has_value());
        }
    }
}

TEST_CASE("cokernel presentations") {
    CHECK(cokernel(IntMatrix(2, 2, {Int(2), Int(0), Int(0), Int(3)})) ==
          AbelianGroupPresentation{0, {Int(6)}});
    CHECK(cokernel(IntMatrix(2, 1, {Int(1), Int(1)})) ==
          AbelianGroupPresentation{1, {}});
    CokernelMap cm(IntMatrix(2, 1, {Int(1), Int(1)}));
    CHECK(cm.same_class(v({1, 0}), v({2, 1})));
    CHECK(!cm.same_class(v({1, 0}), v({0, 0})));
    CHECK(cm.is_zero(v({3, 3})));
}

TEST_CASE("cokernel coordinates respect addition and normal form") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    std::uniform_int_distribution<int> e(-5, 5);
    for (int it = 0; it < 60; ++it) {
        std::size_t r = dim(rng);
        IntMatrix a = fx::random_matrix(rng, r, dim(rng), 6);
        CokernelMap cm(a);
        Vec y1(r), y2(r);
        for (Int& x : y1) x = e(rng);
        for (Int& x : y2) x = e(rng);
        // [y1] = [y1 + A z]
        Vec z(a.cols(), Int(2));
        CHECK(cm.coords(y1) == cm.coords(add(y1, a * z)));
        CHECK(cm.same_class(y1, y2) ==
              (cm.coords(y1) == cm.coords(y2)));
    }
}

TEST_CASE("unimodular inverse") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 40; ++it) {
        IntMatrix u = fx::random_unimodular(rng, 3);
        CHECK(u * inverse_unimodular(u) == IntMatrix::identity(3));
    }
}

TEST_CASE("lattice bases and preimages") {
    auto b = lattice_basis_from_generators(2, {v({2, 0}), v({0, 3}), v({2, 3})});
    // the lattice 2Z x 3Z: membership via integer solve
    IntMatrix bm = IntMatrix::from_cols(b);
    CHECK(solve_integer(bm, v({2, 0})).has_value());
    CHECK(solve_integer(bm, v({4, 3})).has_value());
    CHECK(!solve_integer(bm, v({1, 0})).has_value());
    CHECK(!solve_integer(bm, v({0, 1})).has_value());

    // preimage of 2Z under x -> 3x is 2Z (gcd(3,2)=1)
    auto pre = lattice_preimage(IntMatrix(1, 1, {Int(3)}), 1, {v({2})});
    REQUIRE(pre.size() == 1);
    Int g = pre[0][0];
    CHECK((g == 2 || g == -2));
}
