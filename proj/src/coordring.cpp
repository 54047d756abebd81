#include "torq/coordring.hpp"

#include <algorithm>
#include <set>

namespace torq {

namespace {

Int rat_floor(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

// Facets of a (possibly lower-dimensional) cone: faces cut out by the
// dual generators that do not vanish identically.
std::vector<Cone> facets_of(const Cone& c) {
    std::vector<Cone> out;
    std::set<std::vector<Vec>> seen;
    for (const Vec& n : c.inequalities()) {
        bool vanishes = true;
        for (const Vec& g : c.generators())
            if (dot(n, g) != 0) {
                vanishes = false;
                break;
            }
        if (vanishes) continue;
        Cone f = face_of(c, n);
        if (seen.insert(f.generators()).second) out.push_back(std::move(f));
    }
    return out;
}

// Stellar triangulation into simplicial subcones of the same dimension,
// coning the first extreme ray over the facets it avoids.
void triangulate(const Cone& c, std::vector<std::vector<Vec>>& out) {
    std::vector<Vec> ext = extreme_rays(c);
    if (ext.size() == c.dim()) {
        out.push_back(std::move(ext));
        return;
    }
    const Vec apex = ext.front();
    for (const Cone& f : facets_of(c)) {
        if (contains(f, apex)) continue;
        std::vector<std::vector<Vec>> sub;
        triangulate(f, sub);
        for (auto& s : sub) {
            s.push_back(apex);
            out.push_back(std::move(s));
        }
    }
}

// Hilbert basis of a pointed full-dimensional cone: extreme rays plus
// the lattice points of each simplicial piece's fundamental
// parallelepiped, minimalized greedily along a positive functional.
std::vector<Vec> hb_fulldim(const Cone& c) {
    const std::size_t n = c.ambient_rank();
    std::set<Vec> cand;
    for (const Vec& g : extreme_rays(c)) cand.insert(g);

    std::vector<std::vector<Vec>> simplices;
    triangulate(c, simplices);
    for (const auto& s : simplices) {
        IntMatrix w = IntMatrix::from_cols(s);
        SmithDecomposition snf = smith_normal_form(w);
        Int index = 1;
        for (std::size_t i = 0; i < n; ++i) index *= snf.d(i);
        if (index == 1) continue;
        IntMatrix linv = inverse_unimodular(snf.left);
        Vec counter(n, Int(0));
        for (;;) {
            Vec x = linv * counter;
            auto t = solve_rational(w, x);
            if (!t) throw error("hilbert basis: singular simplex");
            for (std::size_t j = 0; j < n; ++j) {
                Int fl = rat_floor((*t)[j]);
                if (fl == 0) continue;
                for (std::size_t i = 0; i < n; ++i) x[i] -= fl * w.at(i, j);
            }
            if (!is_zero_vec(x)) cand.insert(std::move(x));
            // mixed-radix increment over the diagonal boxes
            std::size_t p = 0;
            while (p < n && ++counter[p] == snf.d(p)) counter[p++] = 0;
            if (p == n) break;
        }
    }

    // strictly positive on the cone minus the origin
    Vec grade(n, Int(0));
    for (const Vec& ineq : c.inequalities()) grade = add(grade, ineq);

    std::vector<Vec> sorted(cand.begin(), cand.end());
    std::sort(sorted.begin(), sorted.end(), [&](const Vec& a, const Vec& b) {
        Int fa = dot(grade, a), fb = dot(grade, b);
        if (fa != fb) return fa < fb;
        return canonical_vec_less(a, b);
    });
    std::vector<Vec> kept;
    for (const Vec& g : sorted) {
        bool reducible = false;
        for (const Vec& h : kept)
            if (contains(c, sub(g, h))) {
                reducible = true;
                break;
            }
        if (!reducible) kept.push_back(g);
    }
    std::sort(kept.begin(), kept.end(), canonical_vec_less);
    return kept;
}

} // namespace

std::vector<Vec> hilbert_basis_of(const Cone& c) {
    if (!is_strongly_convex(c)) throw error("hilbert_basis_of: cone is not pointed");
    if (c.dim() == 0) return {};
    if (c.dim() == c.ambient_rank()) return hb_fulldim(c);
    // pass to a saturated basis of the linear span
    std::vector<Vec> ann = kernel_basis(IntMatrix::from_rows(c.generators()));
    std::vector<Vec> span = kernel_basis(IntMatrix::from_rows(ann));
    IntMatrix b = IntMatrix::from_cols(span);
    std::vector<Vec> local;
    for (const Vec& g : c.generators()) {
        auto x = solve_integer(b, g);
        if (!x) throw error("hilbert_basis_of: span basis not saturated");
        local.push_back(*x);
    }
    std::vector<Vec> out;
    for (const Vec& h : hb_fulldim(Cone(span.size(), local)))
        out.push_back(b * h);
    std::sort(out.begin(), out.end(), canonical_vec_less);
    return out;
}

GradedCoordinateRing section_monoid(const QuotientPresentation& qp) {
    Cone xbar = qp.sigma_bar;
    Cone section = dual_cone(xbar);
    if (!is_strongly_convex(section))
        throw error("section_monoid: monoid has units "
                    "(presentation hull is not full-dimensional)");
    std::vector<Vec> hb = hilbert_basis_of(section);
    WeightGroup w(qp.triangle);
    std::vector<Vec> degs;
    for (const Vec& h : hb) degs.push_back(w.project(h));
    return GradedCoordinateRing{qp, std::move(xbar), std::move(section),
                                std::move(hb), std::move(degs), std::move(w)};
}

bool irrelevant_membership(const GradedCoordinateRing& r, const Vec& mhat) {
    if (!r.in_monoid(mhat))
        throw error("irrelevant_membership: monomial outside the section monoid");
    Cone f = face_of(r.xbar_cone, mhat);
    return r.presentation.fan_map.source().find_cone(f).has_value();
}

std::vector<Vec> irrelevant_generators(const GradedCoordinateRing& r) {
    const Fan& dhat = r.presentation.fan_map.source();
    const std::size_t n = r.xbar_cone.ambient_rank();
    std::vector<Vec> out;
    for (std::size_t mi : dhat.max_cones()) {
        const Cone& s = dhat.cone(mi);
        // sum of the dual generators vanishing on s lies in the relative
        // interior of the face of the section cone dual to s
        Vec m(n, Int(0));
        for (const Vec& ineq : r.xbar_cone.inequalities()) {
            bool vanishes = true;
            for (const Vec& g : s.generators())
                if (dot(ineq, g) != 0) {
                    vanishes = false;
                    break;
                }
            if (vanishes) m = add(m, ineq);
        }
        if (!same_cone(face_of(r.xbar_cone, m), s))
            throw error("irrelevant_generators: internal dual-face failure");
        out.push_back(std::move(m));
    }
    return out;
}

namespace {

// Generator list of the base cone whose relative interior meets the
// image of the relative interior of t.
std::vector<Vec> orbit_image_key(const GradedCoordinateRing& r, const Cone& t) {
    const FanMap& fm = r.presentation.fan_map;
    Vec p = fm.matrix() * relative_interior_point(t);
    return smallest_containing_cone(fm.target(), p).generators();
}

} // namespace

bool is_saturated(const GradedCoordinateRing& r, const Vec& mhat) {
    if (!r.in_monoid(mhat))
        throw error("is_saturated: monomial outside the section monoid");
    const Fan& dhat = r.presentation.fan_map.source();
    std::vector<char> zero_face(dhat.num_cones());
    std::set<std::vector<Vec>> hit_orbits;
    for (std::size_t i = 0; i < dhat.num_cones(); ++i) {
        bool vanishes = true;
        for (const Vec& g : dhat.cone(i).generators())
            if (dot(mhat, g) != 0) {
                vanishes = false;
                break;
            }
        zero_face[i] = vanishes;
        if (vanishes) hit_orbits.insert(orbit_image_key(r, dhat.cone(i)));
    }
    for (std::size_t i = 0; i < dhat.num_cones(); ++i) {
        if (zero_face[i]) continue;
        if (hit_orbits.count(orbit_image_key(r, dhat.cone(i)))) return false;
    }
    return true;
}

std::vector<Vec> saturated_covering(const GradedCoordinateRing& r) {
    const FanMap& fm = r.presentation.fan_map;
    const Fan& dhat = fm.source();
    const Fan& base = fm.target();
    std::vector<Vec> gens = irrelevant_generators(r);
    std::vector<Vec> out(base.max_cones().size());
    std::vector<char> assigned(out.size(), 0);
    for (std::size_t k = 0; k < dhat.max_cones().size(); ++k) {
        std::vector<Vec> images;
        for (const Vec& g : dhat.cone(dhat.max_cones()[k]).generators())
            images.push_back(fm.matrix() * g);
        Cone img(base.ambient_rank(), std::move(images));
        for (std::size_t t = 0; t < base.max_cones().size(); ++t)
            if (same_cone(img, base.cone(base.max_cones()[t]))) {
                out[t] = gens[k];
                assigned[t] = 1;
                break;
            }
    }
    for (std::size_t t = 0; t < out.size(); ++t) {
        if (!assigned[t] || !is_saturated(r, out[t]))
            throw error("saturated_covering: internal covering failure");
    }
    return out;
}

std::vector<Vec> veronese_degrees(const GradedCoordinateRing& r,
                                  std::size_t max_cone_idx) {
    const Fan& base = r.presentation.fan_map.target();
    if (max_cone_idx >= base.max_cones().size())
        throw error("veronese_degrees: maximal cone index out of range");
    auto ray_idx = base.cone_rays(base.max_cones()[max_cone_idx]);
    IntMatrix a = r.presentation.triangle.phi2.select_rows(ray_idx);
    IntMatrix vs = div_matrix(base).select_rows(ray_idx);
    std::vector<Vec> vgens;
    for (std::size_t j = 0; j < vs.cols(); ++j) vgens.push_back(vs.col(j));
    return lattice_preimage(a, ray_idx.size(), vgens);
}

WeilDivisor weight_divisor(const GradedCoordinateRing& r, const Vec& mhat) {
    return r.presentation.triangle.image_divisor(mhat);
}

bool weight_module_member(const GradedCoordinateRing& r, std::size_t max_cone_idx,
                          const Vec& mhat, const Vec& m) {
    const Fan& base = r.presentation.fan_map.target();
    if (max_cone_idx >= base.max_cones().size())
        throw error("weight_module_member: maximal cone index out of range");
    Vec d = r.presentation.triangle.phi2 * mhat;
    for (std::size_t rho : base.cone_rays(base.max_cones()[max_cone_idx]))
        if (dot(m, base.rays()[rho]) < -d[rho]) return false;
    return true;
}

} // namespace torq
