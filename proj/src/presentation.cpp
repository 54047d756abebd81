#include "torq/presentation.hpp"

#include <algorithm>
#include <set>

namespace torq {

WeilDivisor Triangle::basis_divisor(std::size_t i) const {
    return WeilDivisor(base_fan, phi2.col(i));
}

WeilDivisor Triangle::image_divisor(const Vec& mhat) const {
    return WeilDivisor(base_fan, phi2 * mhat);
}

std::vector<Vec> Triangle::image_lattice() const {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < phi2.cols(); ++j) cols.push_back(phi2.col(j));
    return lattice_basis_from_generators(base_fan.num_rays(), cols);
}

Triangle new_triangle(const Fan& base_fan, const IntMatrix& phi1,
                      const IntMatrix& phi2) {
    const std::size_t rank = base_fan.ambient_rank();
    const std::size_t nrays = base_fan.num_rays();
    if (phi1.cols() != rank) throw error("new_triangle: phi1 column count != rank of M");
    const std::size_t mhat = phi1.rows();
    if (phi2.cols() != mhat || phi2.rows() != nrays)
        throw error("new_triangle: phi2 dimensions do not match");
    if (phi2 * phi1 != div_matrix(base_fan))
        throw error("new_triangle: phi2 * phi1 is not the div map");
    if (torq::rank(phi1) != rank) throw error("new_triangle: phi1 is not injective");

    Triangle t{base_fan, mhat, phi1, phi2};
    auto image = t.image_lattice();
    for (std::size_t mi : base_fan.max_cones())
        if (!effective_with_support(base_fan, base_fan.cone(mi), image))
            throw error(
                "new_triangle: no effective divisor in the image supported on the "
                "complement of a maximal chart");
    return t;
}

PresentationReport check_presentation(const FanMap& fm) {
    PresentationReport rep;
    const Fan& src = fm.source();
    const Fan& tgt = fm.target();
    const IntMatrix& q = fm.matrix();

    rep.finite_cokernel = (rank(q) == tgt.ambient_rank());
    rep.face_fan = enclosing_face_fan(src);

    // (iii) bijection on maximal cones
    {
        std::set<std::size_t> hit;
        bool ok = true;
        for (std::size_t si : src.max_cones()) {
            std::vector<Vec> images;
            for (const Vec& g : src.cone(si).generators()) images.push_back(q * g);
            Cone img(tgt.ambient_rank(), images);
            bool matched = false;
            for (std::size_t ti : tgt.max_cones()) {
                if (same_cone(img, tgt.cone(ti))) {
                    if (!hit.insert(ti).second) ok = false;
                    matched = true;
                    break;
                }
            }
            if (!matched) ok = false;
        }
        rep.max_bijective = ok && hit.size() == tgt.max_cones().size();
    }

    // (iii) bijection on rays and (iv) primitivity
    {
        std::set<std::size_t> hit;
        bool bij = true, prim = true;
        for (const Vec& vhat : src.rays()) {
            Vec w = q * vhat;
            if (is_zero_vec(w)) {
                bij = prim = false;
                continue;
            }
            if (gcd_vec(w) != 1) prim = false;
            Vec p = make_primitive(w);
            bool matched = false;
            for (std::size_t r = 0; r < tgt.num_rays(); ++r)
                if (tgt.rays()[r] == p) {
                    if (!hit.insert(r).second) bij = false;
                    matched = true;
                    break;
                }
            if (!matched) bij = false;
        }
        rep.ray_bijective = bij && hit.size() == tgt.num_rays();
        rep.primitive_images = prim;
    }
    return rep;
}

QuotientPresentation build_presentation(const Triangle& t) {
    const Fan& base = t.base_fan;
    std::vector<Cone> tops;
    for (std::size_t mi : base.max_cones()) {
        std::vector<Vec> gens;
        for (std::size_t r : base.cone_rays(mi)) gens.push_back(t.phi2.row(r));
        tops.emplace_back(t.mhat_rank, std::move(gens));
    }
    Fan delta_hat = new_fan(t.mhat_rank, tops);
    IntMatrix q = t.phi1.transpose();
    FanMap fm = new_fan_map(q, delta_hat, base);
    PresentationReport rep = check_presentation(fm);
    if (!rep.verdict())
        throw error("build_presentation: valid triangle produced an invalid "
                    "presentation (internal invariant violated)");
    std::vector<std::size_t> bij;
    for (const Vec& vhat : delta_hat.rays())
        bij.push_back(fm.target().ray_index(make_primitive(q * vhat)));
    return QuotientPresentation{std::move(fm), t, *rep.face_fan, std::move(bij)};
}

WeilDivisor strict_transform(const QuotientPresentation& qp, const WeilDivisor& d) {
    if (!d.fan.same_fan(qp.fan_map.target()))
        throw error("strict_transform: divisor not on the base fan");
    const Fan& src = qp.fan_map.source();
    Vec coeffs(src.num_rays());
    for (std::size_t i = 0; i < src.num_rays(); ++i)
        coeffs[i] = d.coeffs[qp.ray_bijection[i]];
    return WeilDivisor(src, std::move(coeffs));
}

WeilDivisor pushforward(const QuotientPresentation& qp, const WeilDivisor& dhat) {
    if (!dhat.fan.same_fan(qp.fan_map.source()))
        throw error("pushforward: divisor not on the presentation fan");
    const Fan& tgt = qp.fan_map.target();
    Vec coeffs(tgt.num_rays());
    for (std::size_t i = 0; i < qp.ray_bijection.size(); ++i)
        coeffs[qp.ray_bijection[i]] = dhat.coeffs[i];
    return WeilDivisor(tgt, std::move(coeffs));
}

Triangle cox_triangle(const Fan& f) {
    IntMatrix div = div_matrix(f);
    if (rank(div) != f.ambient_rank())
        throw error("cox_triangle: fan is degenerate (div not injective); "
                    "use the canonical triangle instead");
    return new_triangle(f, div, IntMatrix::identity(f.num_rays()));
}

Triangle canonical_triangle(const Fan& f) {
    IntMatrix div = div_matrix(f);
    std::vector<Vec> ker = kernel_basis(div);
    const std::size_t k = ker.size();
    const std::size_t rank_m = f.ambient_rank();
    const std::size_t nrays = f.num_rays();

    // projection P with P * K = identity (K saturated)
    IntMatrix phi1(k + nrays, rank_m);
    if (k > 0) {
        // rows of the projection solve K^T p = e_i (K saturated, so solvable)
        IntMatrix kt = IntMatrix::from_cols(ker).transpose();  // k x rank
        for (std::size_t i = 0; i < k; ++i) {
            Vec e(k, Int(0));
            e[i] = 1;
            auto p = solve_integer(kt, e);
            if (!p) throw error("canonical_triangle: internal projection failure");
            for (std::size_t j = 0; j < rank_m; ++j) phi1.at(i, j) = (*p)[j];
        }
    }
    for (std::size_t r = 0; r < nrays; ++r)
        for (std::size_t j = 0; j < rank_m; ++j) phi1.at(k + r, j) = div.at(r, j);

    IntMatrix phi2(nrays, k + nrays);
    for (std::size_t r = 0; r < nrays; ++r) phi2.at(r, k + r) = 1;
    return new_triangle(f, phi1, phi2);
}

Triangle kajiwara_triangle(const Fan& f) {
    std::vector<Vec> cart = cartier_subgroup(f);
    for (std::size_t mi : f.max_cones())
        if (!effective_with_support(f, f.cone(mi), cart))
            throw error("kajiwara_triangle: not enough Cartier divisors");
    IntMatrix phi2 = IntMatrix::from_cols(cart);
    IntMatrix div = div_matrix(f);
    std::vector<Vec> phi1_cols;
    for (std::size_t j = 0; j < f.ambient_rank(); ++j) {
        auto x = solve_integer(phi2, div.col(j));
        if (!x) throw error("kajiwara_triangle: internal div factorization failure");
        phi1_cols.push_back(*x);
    }
    return new_triangle(f, IntMatrix::from_cols(phi1_cols), phi2);
}

Triangle ample_triangle(const WeilDivisor& d) {
    auto cd = is_cartier(d);
    if (!cd) throw error("ample_triangle: divisor is not Cartier");
    if (!is_ample(d, *cd)) throw error("ample_triangle: divisor is not ample");
    const Fan& f = d.fan;
    const std::size_t rank_m = f.ambient_rank();
    IntMatrix phi1(rank_m + 1, rank_m);
    for (std::size_t i = 0; i < rank_m; ++i) phi1.at(i, i) = 1;
    IntMatrix phi2 = div_matrix(f).hstack(IntMatrix::from_cols({d.coeffs}));
    return new_triangle(f, phi1, phi2);
}

WeightGroup::WeightGroup(const Triangle& t)
    : mhat_rank_(t.mhat_rank), coker_(t.phi1) {}

bool WeightGroup::in_subgroup(const Vec& mhat,
                              const std::vector<Vec>& subgroup_reps) const {
    Vec w = project(mhat);
    const std::size_t dim = w.size();
    std::vector<Vec> cols;
    for (const Vec& g : subgroup_reps) cols.push_back(project(g));
    const auto& tors = coker_.group().torsion;
    for (std::size_t i = 0; i < tors.size(); ++i) {
        Vec rel(dim, Int(0));
        rel[i] = tors[i];
        cols.push_back(std::move(rel));
    }
    if (cols.empty()) return is_zero_vec(w);
    return solve_integer(IntMatrix::from_cols(cols), w).has_value();
}

WeightGroup weight_group(const Triangle& t) { return WeightGroup(t); }

Vec snake_class(const Triangle& t, const Vec& mhat) {
    return ClassGroup(t.base_fan).class_of(t.image_divisor(mhat));
}

Triangle cartierization(const Triangle& t) {
    std::vector<Vec> cart = cartier_subgroup(t.base_fan);
    std::vector<Vec> pre = lattice_preimage(t.phi2, t.base_fan.num_rays(), cart);
    if (pre.empty()) throw error("cartierization: trivial preimage lattice");
    IntMatrix b = IntMatrix::from_cols(pre);
    std::vector<Vec> phi1_cols;
    for (std::size_t j = 0; j < t.phi1.cols(); ++j) {
        auto x = solve_integer(b, t.phi1.col(j));
        if (!x)
            throw error("cartierization: internal failure lifting M into the "
                        "preimage lattice");
        phi1_cols.push_back(*x);
    }
    return new_triangle(t.base_fan, IntMatrix::from_cols(phi1_cols), t.phi2 * b);
}

Classification classify(const Triangle& t) {
    Classification c;
    c.geometric = c.principal = true;
    for (std::size_t i = 0; i < t.mhat_rank; ++i) {
        WeilDivisor d = t.basis_divisor(i);
        if (!is_cartier(d)) c.principal = false;
        if (!is_qcartier(d)) c.geometric = false;
        if (!c.principal && !c.geometric) break;
    }
    return c;
}

} // namespace torq
