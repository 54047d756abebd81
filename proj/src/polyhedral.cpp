#include "torq/polyhedral.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace torq {

bool canonical_vec_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

struct Cone::Data {
    std::size_t rank;
    std::vector<Vec> gens;
    mutable std::once_flag dual_once;
    mutable std::vector<Vec> dual_gens;
};

Cone::Cone(std::size_t ambient_rank, std::vector<Vec> generators) {
    auto d = std::make_shared<Data>();
    d->rank = ambient_rank;
    std::set<Vec> seen;
    for (Vec& g : generators) {
        if (g.size() != ambient_rank) throw error("Cone: generator of wrong rank");
        if (is_zero_vec(g)) continue;
        Vec p = make_primitive(std::move(g));
        if (seen.insert(p).second) d->gens.push_back(std::move(p));
    }
    std::sort(d->gens.begin(), d->gens.end(), canonical_vec_less);
    d_ = std::move(d);
}

std::size_t Cone::ambient_rank() const { return d_->rank; }
const std::vector<Vec>& Cone::generators() const { return d_->gens; }

std::size_t Cone::dim() const {
    if (d_->gens.empty()) return 0;
    return rank(IntMatrix::from_rows(d_->gens));
}

namespace {

// Facet normals of the full-dimensional cone spanned by `gens` in Z^r,
// r >= 1: candidates are kernel vectors of (r-1)-subsets of generators.
std::vector<Vec> facet_normals_fulldim(std::size_t r, const std::vector<Vec>& gens) {
    std::set<Vec> out;
    const std::size_t n = gens.size();
    std::vector<std::size_t> subset;
    // iterate over all (r-1)-subsets via bitmask-free recursion
    auto consider = [&](const std::vector<std::size_t>& s) {
        IntMatrix m(s.size(), r);
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = 0; j < r; ++j) m.at(i, j) = gens[s[i]][j];
        auto ker = kernel_basis(m);
        if (ker.size() != 1) return;
        for (int sign = 0; sign < 2; ++sign) {
            Vec cand = sign ? negate(ker[0]) : ker[0];
            bool ok = true;
            for (const Vec& g : gens)
                if (dot(cand, g) < 0) { ok = false; break; }
            if (ok) out.insert(make_primitive(std::move(cand)));
        }
    };
    std::vector<std::size_t> idx;
    auto rec = [&](auto&& self, std::size_t start, std::size_t need) -> void {
        if (need == 0) { consider(idx); return; }
        for (std::size_t i = start; i + need <= n; ++i) {
            idx.push_back(i);
            self(self, i + 1, need - 1);
            idx.pop_back();
        }
    };
    if (r == 1) {
        consider({});
    } else {
        rec(rec, 0, r - 1);
    }
    return {out.begin(), out.end()};
}

std::vector<Vec> compute_dual_gens(std::size_t rank_, const std::vector<Vec>& gens) {
    std::set<Vec> out;
    if (gens.empty()) {
        for (std::size_t i = 0; i < rank_; ++i) {
            Vec e(rank_, Int(0));
            e[i] = 1;
            out.insert(e);
            out.insert(negate(e));
        }
        return {out.begin(), out.end()};
    }
    IntMatrix v = IntMatrix::from_rows(gens);
    // annihilator of the span: lineality of the dual cone
    std::vector<Vec> ann = kernel_basis(v);
    for (const Vec& a : ann) {
        out.insert(a);
        out.insert(negate(a));
    }
    // saturated lattice basis of the span
    std::vector<Vec> span_basis;
    if (ann.empty()) {
        for (std::size_t i = 0; i < rank_; ++i) {
            Vec e(rank_, Int(0));
            e[i] = 1;
            span_basis.push_back(std::move(e));
        }
    } else {
        span_basis = kernel_basis(IntMatrix::from_rows(ann));
    }
    const std::size_t r = span_basis.size();
    IntMatrix b = IntMatrix::from_cols(span_basis);
    std::vector<Vec> coords;
    for (const Vec& g : gens) {
        auto y = solve_integer(b, g);
        if (!y) throw error("dual_cone: internal span coordinate failure");
        coords.push_back(*y);
    }
    IntMatrix bt = IntMatrix::from_rows(span_basis);
    for (const Vec& n : facet_normals_fulldim(r, coords)) {
        auto m = solve_integer(bt, n);
        if (!m) throw error("dual_cone: internal functional lift failure");
        out.insert(make_primitive(*m));
    }
    return {out.begin(), out.end()};
}

} // namespace

const std::vector<Vec>& Cone::inequalities() const {
    std::call_once(d_->dual_once, [this] {
        d_->dual_gens = compute_dual_gens(d_->rank, d_->gens);
        std::sort(d_->dual_gens.begin(), d_->dual_gens.end(), canonical_vec_less);
    });
    return d_->dual_gens;
}

Cone dual_cone(const Cone& c) {
    return Cone(c.ambient_rank(), c.inequalities());
}

bool contains(const Cone& c, const Vec& v) {
    if (v.size() != c.ambient_rank()) throw error("contains: rank mismatch");
    for (const Vec& n : c.inequalities())
        if (dot(n, v) < 0) return false;
    return true;
}

bool relint_contains(const Cone& c, const Vec& v) {
    if (!contains(c, v)) return false;
    for (const Vec& n : c.inequalities()) {
        bool vanishes_on_cone = true;
        for (const Vec& g : c.generators())
            if (dot(n, g) != 0) { vanishes_on_cone = false; break; }
        if (!vanishes_on_cone && dot(n, v) == 0) return false;
    }
    return true;
}

bool same_cone(const Cone& a, const Cone& b) {
    if (a.ambient_rank() != b.ambient_rank()) return false;
    for (const Vec& g : a.generators())
        if (!contains(b, g)) return false;
    for (const Vec& g : b.generators())
        if (!contains(a, g)) return false;
    return true;
}

bool is_strongly_convex(const Cone& c) {
    if (c.generators().empty()) return true;
    const auto& ineq = c.inequalities();
    if (ineq.empty()) return c.ambient_rank() == 0;
    return rank(IntMatrix::from_rows(ineq)) == c.ambient_rank();
}

Cone face_of(const Cone& c, const Vec& m) {
    if (m.size() != c.ambient_rank()) throw error("face_of: rank mismatch");
    std::vector<Vec> kept;
    for (const Vec& g : c.generators()) {
        Int p = dot(m, g);
        if (p < 0) throw error("face_of: functional not in the dual cone");
        if (p == 0) kept.push_back(g);
    }
    return Cone(c.ambient_rank(), std::move(kept));
}

Vec relative_interior_point(const Cone& c) {
    Vec s(c.ambient_rank(), Int(0));
    for (const Vec& g : c.generators()) s = add(s, g);
    return s;
}

std::vector<Vec> extreme_rays(const Cone& c) {
    std::set<Vec> out;
    for (const Vec& g : c.generators()) {
        // minimal face containing g
        Vec m(c.ambient_rank(), Int(0));
        for (const Vec& n : c.inequalities())
            if (dot(n, g) == 0) m = add(m, n);
        Cone f = face_of(c, m);
        if (f.dim() == 1) out.insert(g);
    }
    std::vector<Vec> r(out.begin(), out.end());
    std::sort(r.begin(), r.end(), canonical_vec_less);
    return r;
}

std::vector<Cone> faces(const Cone& c) {
    if (!is_strongly_convex(c)) throw error("faces: cone is not strongly convex");
    Cone top(c.ambient_rank(), extreme_rays(c));
    std::map<std::vector<Vec>, Cone> seen;
    std::vector<Cone> queue{top};
    seen.emplace(top.generators(), top);
    while (!queue.empty()) {
        Cone cur = queue.back();
        queue.pop_back();
        for (const Vec& n : cur.inequalities()) {
            Cone f = face_of(cur, n);
            if (f.generators() == cur.generators()) continue;
            if (seen.emplace(f.generators(), f).second) queue.push_back(f);
        }
    }
    std::vector<Cone> out;
    for (auto& [key, cone] : seen) out.push_back(cone);
    return out;
}

bool is_face(const Cone& f, const Cone& c) {
    if (f.ambient_rank() != c.ambient_rank()) return false;
    for (const Vec& g : f.generators())
        if (!contains(c, g)) return false;
    Vec m(c.ambient_rank(), Int(0));
    for (const Vec& n : c.inequalities()) {
        bool ok = true;
        for (const Vec& g : f.generators())
            if (dot(n, g) != 0) { ok = false; break; }
        if (ok) m = add(m, n);
    }
    return same_cone(face_of(c, m), f);
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient_rank() != b.ambient_rank()) throw error("intersect: rank mismatch");
    std::vector<Vec> ineqs = a.inequalities();
    const auto& bi = b.inequalities();
    ineqs.insert(ineqs.end(), bi.begin(), bi.end());
    return dual_cone(Cone(a.ambient_rank(), std::move(ineqs)));
}

namespace {

// One inequality sum(a_j z_j) >= b over the remaining variables.
struct QIneq {
    QVec a;
    Rat b;
};

// Decide feasibility of the system and return a witness.
std::optional<QVec> fm_solve(std::size_t nvars, std::vector<QIneq> sys) {
    std::vector<std::vector<QIneq>> levels;
    levels.push_back(sys);
    for (std::size_t v = 0; v < nvars; ++v) {
        const auto& cur = levels.back();
        std::vector<QIneq> next;
        std::vector<const QIneq*> pos, neg;
        for (const QIneq& q : cur) {
            if (q.a[v] > 0) pos.push_back(&q);
            else if (q.a[v] < 0) neg.push_back(&q);
            else next.push_back(q);
        }
        for (const QIneq* p : pos)
            for (const QIneq* m : neg) {
                // scale so the v-coefficients cancel
                QIneq comb;
                comb.a.assign(nvars, Rat(0));
                Rat cp = p->a[v], cm = -m->a[v];
                for (std::size_t j = 0; j < nvars; ++j)
                    comb.a[j] = p->a[j] * cm + m->a[j] * cp;
                comb.b = p->b * cm + m->b * cp;
                next.push_back(std::move(comb));
            }
        levels.push_back(std::move(next));
    }
    for (const QIneq& q : levels.back())
        if (q.b > 0) return std::nullopt;
    QVec z(nvars, Rat(0));
    for (std::size_t vi = nvars; vi-- > 0;) {
        bool has_lo = false, has_hi = false;
        Rat lo, hi;
        for (const QIneq& q : levels[vi]) {
            if (q.a[vi] == 0) continue;
            Rat rest = q.b;
            for (std::size_t j = vi + 1; j < nvars; ++j) rest -= q.a[j] * z[j];
            Rat bound = rest / q.a[vi];
            if (q.a[vi] > 0) {
                if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
            } else {
                if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
            }
        }
        if (has_lo) z[vi] = lo;
        else if (has_hi) z[vi] = hi;
        else z[vi] = 0;
    }
    return z;
}

} // namespace

std::optional<Vec> strict_sign_solution(std::size_t n,
                                        const std::vector<Vec>& lattice,
                                        const std::vector<std::size_t>& zero_idx,
                                        const std::vector<std::size_t>& pos_idx) {
    std::set<std::size_t> zset(zero_idx.begin(), zero_idx.end());
    for (std::size_t i : pos_idx)
        if (zset.count(i)) throw error("strict_sign_solution: overlapping index sets");
    for (std::size_t i : zero_idx)
        if (i >= n) throw error("strict_sign_solution: index out of range");
    for (std::size_t i : pos_idx)
        if (i >= n) throw error("strict_sign_solution: index out of range");
    for (const Vec& l : lattice)
        if (l.size() != n) throw error("strict_sign_solution: bad lattice vector");

    if (lattice.empty()) {
        if (pos_idx.empty()) return Vec(n, Int(0));
        return std::nullopt;
    }
    IntMatrix b = IntMatrix::from_cols(lattice);
    const std::size_t k = lattice.size();

    // restrict to the sublattice vanishing on zero_idx
    std::vector<Vec> kbasis;
    if (zero_idx.empty()) {
        for (std::size_t j = 0; j < k; ++j) {
            Vec e(k, Int(0));
            e[j] = 1;
            kbasis.push_back(std::move(e));
        }
    } else {
        IntMatrix zrows = b.select_rows(zero_idx);
        kbasis = kernel_basis(zrows);
    }
    if (kbasis.empty()) {
        if (pos_idx.empty()) return Vec(n, Int(0));
        return std::nullopt;
    }
    // columns: x = B * K * z ; strict positivity on pos_idx rows
    IntMatrix bk = b * IntMatrix::from_cols(kbasis);
    const std::size_t nz = kbasis.size();
    if (pos_idx.empty()) return Vec(n, Int(0));

    std::vector<QIneq> sys;
    for (std::size_t i : pos_idx) {
        QIneq q;
        q.a.assign(nz, Rat(0));
        for (std::size_t j = 0; j < nz; ++j) q.a[j] = Rat(bk.at(i, j));
        q.b = 1;  // strictness is scale invariant
        sys.push_back(std::move(q));
    }
    auto z = fm_solve(nz, std::move(sys));
    if (!z) return std::nullopt;
    // clear denominators
    Int lcm = 1;
    for (const Rat& v : *z) {
        Int den = denominator(v);
        lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    Vec zi(nz);
    for (std::size_t j = 0; j < nz; ++j)
        zi[j] = numerator((*z)[j]) * (lcm / denominator((*z)[j]));
    Vec x = bk * zi;
    for (std::size_t i : zero_idx)
        if (x[i] != 0) throw error("strict_sign_solution: internal zero violation");
    for (std::size_t i : pos_idx)
        if (x[i] <= 0) throw error("strict_sign_solution: internal sign violation");
    return x;
}

} // namespace torq
