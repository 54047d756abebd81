#include "torq/divisor.hpp"

#include <algorithm>

namespace torq {

IntMatrix div_matrix(const Fan& f) {
    return IntMatrix::from_rows(f.rays());
}

WeilDivisor div_char(const Fan& f, const Vec& m) {
    if (m.size() != f.ambient_rank()) throw error("div_char: rank mismatch");
    Vec coeffs(f.num_rays());
    for (std::size_t i = 0; i < f.num_rays(); ++i) coeffs[i] = dot(m, f.rays()[i]);
    return WeilDivisor(f, std::move(coeffs));
}

namespace {

// The local system for a maximal cone: rows v_rho, rhs -D_rho.
std::pair<IntMatrix, Vec> chart_system(const WeilDivisor& d, std::size_t max_idx) {
    const Fan& f = d.fan;
    auto rays = f.cone_rays(f.max_cones()[max_idx]);
    std::vector<Vec> rows;
    Vec rhs;
    for (std::size_t r : rays) {
        rows.push_back(f.rays()[r]);
        rhs.push_back(-d.coeffs[r]);
    }
    return {IntMatrix::from_rows(rows), rhs};
}

} // namespace

std::optional<CartierData> is_cartier(const WeilDivisor& d) {
    CartierData cd;
    for (std::size_t k = 0; k < d.fan.max_cones().size(); ++k) {
        auto [a, b] = chart_system(d, k);
        auto m = solve_integer(a, b);
        if (!m) return std::nullopt;
        cd.functionals.push_back(*m);
    }
    return cd;
}

std::optional<QCartierData> is_qcartier(const WeilDivisor& d) {
    QCartierData cd;
    for (std::size_t k = 0; k < d.fan.max_cones().size(); ++k) {
        auto [a, b] = chart_system(d, k);
        auto m = solve_rational(a, b);
        if (!m) return std::nullopt;
        cd.functionals.push_back(*m);
    }
    return cd;
}

ClassGroup::ClassGroup(const Fan& f) : fan_(f), coker_(div_matrix(f)) {}

Vec ClassGroup::class_of(const WeilDivisor& d) const {
    if (!d.fan.same_fan(fan_)) throw error("class_of: divisor on a different fan");
    return coker_.coords(d.coeffs);
}

AbelianGroupPresentation class_group(const Fan& f) {
    return ClassGroup(f).group();
}

std::optional<Vec> is_principal(const WeilDivisor& d) {
    return solve_integer(div_matrix(d.fan), d.coeffs);
}

bool linearly_equivalent(const WeilDivisor& d1, const WeilDivisor& d2) {
    if (!d1.fan.same_fan(d2.fan))
        throw error("linearly_equivalent: divisors on different fans");
    return is_principal(WeilDivisor(d1.fan, sub(d1.coeffs, d2.coeffs))).has_value();
}

bool is_ample(const WeilDivisor& d, const CartierData& cd) {
    const Fan& f = d.fan;
    if (!is_complete(f)) throw error("is_ample: fan is not complete");
    if (cd.functionals.size() != f.max_cones().size())
        throw error("is_ample: Cartier data does not match the fan");
    for (std::size_t k = 0; k < f.max_cones().size(); ++k) {
        auto in_cone = f.cone_rays(f.max_cones()[k]);
        for (std::size_t r = 0; r < f.num_rays(); ++r) {
            if (std::find(in_cone.begin(), in_cone.end(), r) != in_cone.end())
                continue;
            if (dot(cd.functionals[k], f.rays()[r]) <= -d.coeffs[r]) return false;
        }
    }
    return true;
}

std::vector<Vec> cartier_subgroup(const Fan& f) {
    const std::size_t nrays = f.num_rays();
    const std::size_t rank = f.ambient_rank();
    const std::size_t nmax = f.max_cones().size();
    // unknowns: D in Z^nrays, then one m_sigma in Z^rank per maximal cone;
    // equations: D_rho + <m_sigma, v_rho> = 0 for rho in sigma(1)
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < nmax; ++k) {
        for (std::size_t r : f.cone_rays(f.max_cones()[k])) {
            Vec row(nrays + nmax * rank, Int(0));
            row[r] = 1;
            for (std::size_t j = 0; j < rank; ++j)
                row[nrays + k * rank + j] = f.rays()[r][j];
            rows.push_back(std::move(row));
        }
    }
    std::vector<Vec> projected;
    if (rows.empty()) {
        // no constraints: everything is Cartier
        for (std::size_t i = 0; i < nrays; ++i) {
            Vec e(nrays, Int(0));
            e[i] = 1;
            projected.push_back(std::move(e));
        }
        return projected;
    }
    for (const Vec& k : kernel_basis(IntMatrix::from_rows(rows)))
        projected.emplace_back(k.begin(), k.begin() + nrays);
    return lattice_basis_from_generators(nrays, projected);
}

std::optional<WeilDivisor> effective_with_support(const Fan& f, const Cone& sigma,
                                                  const std::vector<Vec>& lattice) {
    auto idx = f.find_cone(sigma);
    if (!idx) throw error("effective_with_support: cone not in fan");
    std::vector<std::size_t> zero_idx = f.cone_rays(*idx);
    std::vector<std::size_t> pos_idx;
    for (std::size_t r = 0; r < f.num_rays(); ++r)
        if (std::find(zero_idx.begin(), zero_idx.end(), r) == zero_idx.end())
            pos_idx.push_back(r);
    auto x = strict_sign_solution(f.num_rays(), lattice, zero_idx, pos_idx);
    if (!x) return std::nullopt;
    return WeilDivisor(f, *x);
}

} // namespace torq
