#ifndef TORQ_POLYHEDRAL_HPP
#define TORQ_POLYHEDRAL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "torq/zlinalg.hpp"

namespace torq {

/// Rational polyhedral cone, stored by generators. The inequality
/// description (= generators of the dual cone) is computed on first
/// use and cached; all arithmetic is exact.
class Cone {
public:
    Cone(std::size_t ambient_rank, std::vector<Vec> generators);
    static Cone zero(std::size_t ambient_rank) { return Cone(ambient_rank, {}); }

    std::size_t ambient_rank() const;
    /// Primitive, deduplicated generators (zero vectors dropped).
    const std::vector<Vec>& generators() const;
    /// Generators of the dual cone; every generator of this cone
    /// pairs nonnegatively with each of them.
    const std::vector<Vec>& inequalities() const;

    /// Dimension of the linear span.
    std::size_t dim() const;

private:
    struct Data;
    std::shared_ptr<const Data> d_;
};

Cone dual_cone(const Cone& c);

bool contains(const Cone& c, const Vec& v);
/// True iff v lies in the relative interior of c.
bool relint_contains(const Cone& c, const Vec& v);
/// Set equality, decided by mutual containment of generators.
bool same_cone(const Cone& a, const Cone& b);

bool is_strongly_convex(const Cone& c);

/// c intersected with the hyperplane m = 0; m must lie in the dual cone.
Cone face_of(const Cone& c, const Vec& m);

/// All faces of a strongly convex cone, each once, including {0} and c.
std::vector<Cone> faces(const Cone& c);

/// True iff f is a face of c.
bool is_face(const Cone& f, const Cone& c);

Cone intersect(const Cone& a, const Cone& b);

/// Sum of the primitive generators; lies in the relative interior.
Vec relative_interior_point(const Cone& c);

/// Extreme-ray generators of a strongly convex cone, in canonical
/// (descending lexicographic) order.
std::vector<Vec> extreme_rays(const Cone& c);

/// Canonical ordering of lattice vectors: descending lexicographic.
bool canonical_vec_less(const Vec& a, const Vec& b);

/// An element x of the sublattice spanned by `lattice` with x_i = 0 for
/// i in zero_idx and x_i > 0 for i in pos_idx, or nullopt. Strict
/// feasibility is decided exactly over Q by Fourier-Motzkin and scaled
/// to an integer solution.
std::optional<Vec> strict_sign_solution(std::size_t n,
                                        const std::vector<Vec>& lattice,
                                        const std::vector<std::size_t>& zero_idx,
                                        const std::vector<std::size_t>& pos_idx);

} // namespace torq

#endif
