#ifndef TORQ_COORDRING_HPP
#define TORQ_COORDRING_HPP

#include "torq/presentation.hpp"

namespace torq {

/// The section monoid of a quotient presentation with its W-grading.
/// xbar_cone is the hull of the presentation fan in Nhat; section_cone
/// is its dual in Mhat; the monoid is section_cone intersected with the
/// lattice.
struct GradedCoordinateRing {
    QuotientPresentation presentation;
    Cone xbar_cone;
    Cone section_cone;
    std::vector<Vec> hilbert_basis;
    /// W-normal-form degree of each Hilbert basis element.
    std::vector<Vec> hilbert_degrees;
    WeightGroup weights;

    bool in_monoid(const Vec& mhat) const { return contains(section_cone, mhat); }
};

/// Finitely generated monomial ideal in the section monoid.
struct MonomialIdeal {
    std::vector<Vec> generators;
};

/// Builds the coordinate ring data; the Hilbert basis is computed by
/// triangulating the section cone and collecting fundamental
/// parallelepiped points. Requires a pointed section monoid.
GradedCoordinateRing section_monoid(const QuotientPresentation& qp);

/// Hilbert basis of a full-dimensional pointed cone (Gordan-style).
std::vector<Vec> hilbert_basis_of(const Cone& c);

/// True iff the monomial lies in the irrelevant ideal S_+.
bool irrelevant_membership(const GradedCoordinateRing& r, const Vec& mhat);

/// One generator per maximal cone of the presentation fan; together
/// they generate S_+ up to radical.
std::vector<Vec> irrelevant_generators(const GradedCoordinateRing& r);

/// Combinatorial saturation test: the zero-face orbit set of mhat is
/// closed under taking preimages of orbit images.
bool is_saturated(const GradedCoordinateRing& r, const Vec& mhat);

/// Saturated monomials cutting out the canonical affine covering of X,
/// one per maximal cone of the base fan (in max-cone order).
std::vector<Vec> saturated_covering(const GradedCoordinateRing& r);

/// Basis (in Mhat) of the sublattice of weights whose weight module is
/// invertible over the chart of the given maximal cone of the base fan.
std::vector<Vec> veronese_degrees(const GradedCoordinateRing& r,
                                  std::size_t max_cone_idx);

/// The divisor D_w = phi2(mhat) with R_w isomorphic to O_X(D_w).
WeilDivisor weight_divisor(const GradedCoordinateRing& r, const Vec& mhat);

/// chi^m lies in the weight-mhat module over the chart of the given
/// maximal cone.
bool weight_module_member(const GradedCoordinateRing& r, std::size_t max_cone_idx,
                          const Vec& mhat, const Vec& m);

} // namespace torq

#endif
