#ifndef TORQ_PRESENTATION_HPP
#define TORQ_PRESENTATION_HPP

#include "torq/divisor.hpp"

namespace torq {

/// A factorization M -> Mhat -> Z^rays of the div map, with M -> Mhat
/// injective and enough effective images to support every chart
/// complement. phi1 is (mhat_rank x rank), phi2 is (rays x mhat_rank).
struct Triangle {
    Fan base_fan;
    std::size_t mhat_rank;
    IntMatrix phi1;
    IntMatrix phi2;

    /// Columns of phi2 as divisors of the Mhat basis vectors.
    WeilDivisor basis_divisor(std::size_t i) const;
    /// phi2 applied to an Mhat vector, as a divisor on the base fan.
    WeilDivisor image_divisor(const Vec& mhat) const;
    /// Basis of the image lattice of phi2 inside Z^rays.
    std::vector<Vec> image_lattice() const;
};

/// Validates the triangle axioms. The effectivity condition is checked
/// on maximal cones only; feasibility there implies it for every
/// invariant affine chart (scale the maximal-cone divisor and twist by
/// a character interior to the face's dual).
Triangle new_triangle(const Fan& base_fan, const IntMatrix& phi1,
                      const IntMatrix& phi2);

/// Per-condition report of the fan-description test for a fan map.
struct PresentationReport {
    bool finite_cokernel = false;
    std::optional<Cone> face_fan;
    bool max_bijective = false;
    bool ray_bijective = false;
    bool primitive_images = false;
    bool verdict() const {
        return finite_cokernel && face_fan.has_value() && max_bijective &&
               ray_bijective && primitive_images;
    }
};

PresentationReport check_presentation(const FanMap& fm);

/// A quotient presentation q: Xhat -> X with its defining triangle.
struct QuotientPresentation {
    FanMap fan_map;
    Triangle triangle;
    Cone sigma_bar;
    /// ray_bijection[i] = index of the target ray hit by source ray i.
    std::vector<std::size_t> ray_bijection;
};

/// Dualizes the triangle and builds the fan Delta-hat generated by the
/// cones psi(e_rho) over each maximal cone; asserts the result passes
/// check_presentation.
QuotientPresentation build_presentation(const Triangle& t);

/// Transport of divisor coefficients along the ray bijection.
WeilDivisor strict_transform(const QuotientPresentation& qp, const WeilDivisor& d);
WeilDivisor pushforward(const QuotientPresentation& qp, const WeilDivisor& dhat);

Triangle cox_triangle(const Fan& f);
Triangle canonical_triangle(const Fan& f);
Triangle kajiwara_triangle(const Fan& f);
Triangle ample_triangle(const WeilDivisor& d);

/// W = Mhat / M with coordinate transport.
class WeightGroup {
public:
    explicit WeightGroup(const Triangle& t);
    const AbelianGroupPresentation& group() const { return coker_.group(); }
    /// Normal-form coordinates of [mhat] in W.
    Vec project(const Vec& mhat) const { return coker_.coords(mhat); }
    bool same_weight(const Vec& m1, const Vec& m2) const {
        return coker_.same_class(m1, m2);
    }
    /// Membership of [mhat] in the subgroup of W generated by the
    /// classes of the given Mhat vectors.
    bool in_subgroup(const Vec& mhat,
                     const std::vector<Vec>& subgroup_reps) const;

private:
    std::size_t mhat_rank_;
    CokernelMap coker_;
};

WeightGroup weight_group(const Triangle& t);
/// Snake-lemma image: the class of phi2(mhat) in Cl(X).
Vec snake_class(const Triangle& t, const Vec& mhat);

/// Replaces Mhat by the preimage of the Cartier subgroup under phi2.
Triangle cartierization(const Triangle& t);

struct Classification {
    bool good = true;
    bool geometric = false;
    bool principal = false;
};

Classification classify(const Triangle& t);

} // namespace torq

#endif
