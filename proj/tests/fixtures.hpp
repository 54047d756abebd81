// Shared test fixtures and independent oracles. Expected values in the
// test files were computed with these oracles (or by hand) and frozen.
#ifndef TORQ_TESTS_FIXTURES_HPP
#define TORQ_TESTS_FIXTURES_HPP

#include <random>

#include "torq/sheafcalc.hpp"

namespace fx {

using namespace torq;

inline Vec v(std::initializer_list<long> xs) {
    Vec out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

inline Fan p1() {
    return new_fan(1, {Cone(1, {v({1})}), Cone(1, {v({-1})})});
}

inline Fan p2() {
    Vec e1 = v({1, 0}), e2 = v({0, 1}), e3 = v({-1, -1});
    return new_fan(2, {Cone(2, {e1, e2}), Cone(2, {e2, e3}), Cone(2, {e3, e1})});
}

// Hirzebruch-type complete surface fan with rays e1, e2, -e1+a*e2, -e2.
inline Fan hz(long a) {
    Vec e1 = v({1, 0}), e2 = v({0, 1}), f = v({-1, a}), me2 = v({0, -1});
    return new_fan(2, {Cone(2, {e1, e2}), Cone(2, {e2, f}), Cone(2, {f, me2}),
                       Cone(2, {me2, e1})});
}

// Affine surface singularity A^2/mu_2: single cone over (1,0), (1,2).
inline Fan amu2() {
    return new_fan(2, {Cone(2, {v({1, 0}), v({1, 2})})});
}

// Affine threefold: cone over the unit square at height one.
inline Fan qcone() {
    return new_fan(3, {Cone(3, {v({0, 0, 1}), v({1, 0, 1}), v({0, 1, 1}),
                                v({1, 1, 1})})});
}

inline Fan p1xp1() {
    Vec e1 = v({1, 0}), e2 = v({0, 1}), m1 = v({-1, 0}), m2 = v({0, -1});
    return new_fan(2, {Cone(2, {e1, e2}), Cone(2, {e2, m1}), Cone(2, {m1, m2}),
                       Cone(2, {m2, e1})});
}

inline std::vector<Fan> corpus() {
    return {p1(), p2(), hz(1), hz(2), amu2(), qcone(), p1xp1()};
}

// ---------------------------------------------------------------- oracles

// Smith diagonal via gcds of k x k minors: d_k = g_k / g_{k-1}.
inline std::vector<Int> oracle_snf_diag(const IntMatrix& a) {
    const std::size_t r = a.rows(), c = a.cols();
    std::vector<Int> g;  // g[k-1] = gcd of all k x k minors
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
        Int gk = 0;
        std::vector<std::size_t> ri(k), ci(k);
        auto loop = [&](auto&& self, std::vector<std::size_t>& idx,
                        std::size_t limit, std::size_t depth, std::size_t start,
                        auto&& inner) -> void {
            if (depth == k) {
                inner();
                return;
            }
            for (std::size_t i = start; i < limit; ++i) {
                idx[depth] = i;
                self(self, idx, limit, depth + 1, i + 1, inner);
            }
        };
        loop(loop, ri, r, 0, 0, [&] {
            loop(loop, ci, c, 0, 0, [&] {
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        sub.at(i, j) = a.at(ri[i], ci[j]);
                Int d = determinant(sub);
                gk = boost::multiprecision::gcd(gk, d < 0 ? Int(-d) : d);
            });
        });
        if (gk == 0) break;
        g.push_back(gk);
    }
    std::vector<Int> diag;
    Int prev = 1;
    for (const Int& gk : g) {
        diag.push_back(gk / prev);
        prev = gk;
    }
    return diag;  // nonzero entries only
}

inline AbelianGroupPresentation oracle_cokernel(const IntMatrix& a) {
    std::vector<Int> diag = oracle_snf_diag(a);
    AbelianGroupPresentation g;
    g.free_rank = a.rows() - diag.size();
    for (const Int& d : diag)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

// Brute-force membership x in cone(gens) by bounded nonnegative rational
// combinations is unreliable; instead check via the inequality system of
// an independently computed dual: every generator of a must pair >= 0
// with every generator of dual(b) and vice versa.
inline bool oracle_same_cone(const Cone& a, const Cone& b) {
    for (const Vec& g : a.generators())
        if (!contains(b, g)) return false;
    for (const Vec& g : b.generators())
        if (!contains(a, g)) return false;
    return true;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r,
                               std::size_t c, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
    return m;
}

inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
    IntMatrix u = IntMatrix::identity(n);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    for (int step = 0; step < 10; ++step) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        Int c(coef(rng));
        for (std::size_t k = 0; k < n; ++k) u.at(i, k) += c * u.at(j, k);
    }
    return u;
}

} // namespace fx

#endif
