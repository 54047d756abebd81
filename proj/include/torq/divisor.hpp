#ifndef TORQ_DIVISOR_HPP
#define TORQ_DIVISOR_HPP

#include <optional>

#include "torq/fan.hpp"

namespace torq {

/// Invariant Weil divisor: one integer coefficient per fan ray, in the
/// fan's canonical ray order.
struct WeilDivisor {
    Fan fan;
    Vec coeffs;

    WeilDivisor(Fan f, Vec c) : fan(std::move(f)), coeffs(std::move(c)) {
        if (coeffs.size() != fan.num_rays())
            throw error("WeilDivisor: coefficient count != ray count");
    }
};

/// Local data of a Cartier divisor: one lattice functional per maximal
/// cone, in max-cone order, with <m_sigma, v_rho> = -D_rho on the cone.
struct CartierData {
    std::vector<Vec> functionals;
};

/// Rational local data of a Q-Cartier divisor.
struct QCartierData {
    std::vector<QVec> functionals;
};

/// The matrix of div: M -> Z^rays, row rho = v_rho.
IntMatrix div_matrix(const Fan& f);

/// div(chi^m): coefficient at rho is <m, v_rho>.
WeilDivisor div_char(const Fan& f, const Vec& m);

std::optional<CartierData> is_cartier(const WeilDivisor& d);
std::optional<QCartierData> is_qcartier(const WeilDivisor& d);

/// Cl(X) = coker(div) together with the class evaluator.
class ClassGroup {
public:
    explicit ClassGroup(const Fan& f);
    const AbelianGroupPresentation& group() const { return coker_.group(); }
    Vec class_of(const WeilDivisor& d) const;

private:
    Fan fan_;
    CokernelMap coker_;
};

AbelianGroupPresentation class_group(const Fan& f);

std::optional<Vec> is_principal(const WeilDivisor& d);
bool linearly_equivalent(const WeilDivisor& d1, const WeilDivisor& d2);

/// Strict convexity of the support function; requires a complete fan.
bool is_ample(const WeilDivisor& d, const CartierData& cd);

/// Basis of the subgroup of Cartier divisors inside Z^rays.
std::vector<Vec> cartier_subgroup(const Fan& f);

/// An element of the sublattice spanned by `lattice` (inside Z^rays)
/// that vanishes on sigma's rays and is strictly positive elsewhere.
std::optional<WeilDivisor> effective_with_support(const Fan& f, const Cone& sigma,
                                                  const std::vector<Vec>& lattice);

} // namespace torq

#endif
