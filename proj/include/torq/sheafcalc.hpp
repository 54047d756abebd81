#ifndef TORQ_SHEAFCALC_HPP
#define TORQ_SHEAFCALC_HPP

#include "torq/coordring.hpp"

namespace torq {

/// Monomial basis of the global sections of O(D).
struct SectionSpace {
    WeilDivisor divisor;
    /// Lattice points m with <m, v_rho> >= -D_rho, ascending lexicographic.
    std::vector<Vec> basis;
};

/// Lattice points of {x : <normals[i], x> >= rhs[i]}, ascending
/// lexicographic. Throws if the polyhedron is unbounded.
std::vector<Vec> polytope_lattice_points(const std::vector<Vec>& normals,
                                         const Vec& rhs);

/// Requires a complete fan (bounded section polytope).
SectionSpace sections_basis(const WeilDivisor& d);

/// Degree piece of the graded module of O(D): sections of D + phi2(mhat).
SectionSpace gamma_star_piece(const QuotientPresentation& qp,
                              const WeilDivisor& d, const Vec& mhat);

/// True iff the sheaf associated to S/I is zero, decided by the support
/// criterion: every chart of the presentation fan owns an ideal
/// generator orthogonal to its cone.
bool vanishing_test(const GradedCoordinateRing& r, const MonomialIdeal& i);

/// Bounded corroboration of vanishing_test through the annihilation
/// criterion: per chart, every monomial off I with degree in the
/// chart's invertible-weight subgroup (coordinates bounded by B) must
/// enter I after at most K multiplications by the chart's saturated
/// element.
struct VanishingReport {
    bool sheaf_zero = false;
    bool truncation_zero = false;
    bool agree = false;
};

VanishingReport vanishing_crosscheck(const GradedCoordinateRing& r,
                                     const MonomialIdeal& i, const Int& degree_bound,
                                     unsigned power_bound);

} // namespace torq

#endif
