#include "torq/sheafcalc.hpp"

#include <algorithm>

namespace torq {

namespace {

Int rat_floor(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

} // namespace

std::vector<Vec> polytope_lattice_points(const std::vector<Vec>& normals,
                                         const Vec& rhs) {
    if (normals.size() != rhs.size())
        throw error("polytope_lattice_points: normal/rhs count mismatch");
    if (normals.empty()) throw error("polytope_lattice_points: unbounded");
    const std::size_t n = normals.front().size();
    if (n == 0) return {Vec{}};

    // bounded iff the recession cone {x : <a, x> >= 0} is trivial
    if (!dual_cone(Cone(n, normals)).generators().empty())
        throw error("polytope_lattice_points: unbounded");

    // vertices: rational solutions of full-rank n-subsystems that
    // satisfy all inequalities
    std::vector<QVec> vertices;
    std::vector<std::size_t> pick(n);
    auto feasible = [&](const QVec& x) {
        for (std::size_t i = 0; i < normals.size(); ++i) {
            Rat s(0);
            for (std::size_t j = 0; j < n; ++j) s += Rat(normals[i][j]) * x[j];
            if (s < Rat(rhs[i])) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
        if (depth == n) {
            std::vector<Vec> rows;
            Vec b;
            for (std::size_t i : pick) {
                rows.push_back(normals[i]);
                b.push_back(rhs[i]);
            }
            IntMatrix a = IntMatrix::from_rows(rows);
            if (rank(a) != n) return;
            auto x = solve_rational(a, b);
            if (x && feasible(*x)) vertices.push_back(*x);
            return;
        }
        for (std::size_t i = start; i < normals.size(); ++i) {
            pick[depth] = i;
            self(self, depth + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    if (vertices.empty()) return {};

    Vec lo(n), hi(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rat mn = vertices.front()[j], mx = mn;
        for (const QVec& v : vertices) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = rat_floor(mn);
        hi[j] = rat_ceil(mx);
    }

    std::vector<Vec> out;
    Vec x = lo;
    for (;;) {
        bool ok = true;
        for (std::size_t i = 0; i < normals.size() && ok; ++i)
            if (dot(normals[i], x) < rhs[i]) ok = false;
        if (ok) out.push_back(x);
        std::size_t j = 0;
        while (j < n && x[j] == hi[j]) x[j++] = lo[j];
        if (j == n) break;
        ++x[j];
    }
    std::sort(out.begin(), out.end());
    return out;
}

SectionSpace sections_basis(const WeilDivisor& d) {
    if (!is_complete(d.fan))
        throw error("sections_basis: fan is not complete (section space may be "
                    "infinite)");
    Vec rhs = negate(d.coeffs);
    return SectionSpace{d, polytope_lattice_points(d.fan.rays(), rhs)};
}

SectionSpace gamma_star_piece(const QuotientPresentation& qp,
                              const WeilDivisor& d, const Vec& mhat) {
    if (!d.fan.same_fan(qp.fan_map.target()))
        throw error("gamma_star_piece: divisor not on the base fan");
    Vec coeffs = add(d.coeffs, qp.triangle.phi2 * mhat);
    return sections_basis(WeilDivisor(d.fan, std::move(coeffs)));
}

bool vanishing_test(const GradedCoordinateRing& r, const MonomialIdeal& i) {
    for (const Vec& g : i.generators)
        if (!r.in_monoid(g))
            throw error("vanishing_test: ideal generator outside the section monoid");
    const Fan& dhat = r.presentation.fan_map.source();
    for (std::size_t mi : dhat.max_cones()) {
        const Cone& s = dhat.cone(mi);
        bool found = false;
        for (const Vec& g : i.generators) {
            bool orth = true;
            for (const Vec& v : s.generators())
                if (dot(g, v) != 0) {
                    orth = false;
                    break;
                }
            if (orth) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

VanishingReport vanishing_crosscheck(const GradedCoordinateRing& r,
                                     const MonomialIdeal& i, const Int& degree_bound,
                                     unsigned power_bound) {
    VanishingReport rep;
    rep.sheaf_zero = vanishing_test(r, i);

    auto in_ideal = [&](const Vec& m) {
        for (const Vec& g : i.generators)
            if (contains(r.section_cone, sub(m, g))) return true;
        return false;
    };

    const std::size_t n = r.presentation.triangle.mhat_rank;
    std::vector<Vec> covering = saturated_covering(r);
    bool all_killed = true;
    for (std::size_t chart = 0; chart < covering.size() && all_killed; ++chart) {
        std::vector<Vec> ver = veronese_degrees(r, chart);
        const Vec& s = covering[chart];
        Vec m(n, -degree_bound);
        for (;;) {
            if (r.in_monoid(m) && !in_ideal(m) &&
                r.weights.in_subgroup(m, ver)) {
                Vec cur = m;
                bool killed = false;
                for (unsigned k = 0; k < power_bound; ++k) {
                    cur = add(cur, s);
                    if (in_ideal(cur)) {
                        killed = true;
                        break;
                    }
                }
                if (!killed) {
                    all_killed = false;
                    break;
                }
            }
            std::size_t j = 0;
            while (j < n && m[j] == degree_bound) m[j++] = -degree_bound;
            if (j == n) break;
            ++m[j];
        }
    }
    rep.truncation_zero = all_killed;
    rep.agree = (rep.truncation_zero == rep.sheaf_zero);
    return rep;
}

} // namespace torq
