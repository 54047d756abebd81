#ifndef TORQ_FAN_HPP
#define TORQ_FAN_HPP

#include <memory>
#include <optional>
#include <vector>

#include "torq/polyhedral.hpp"

namespace torq {

/// Finite face-closed fan of strongly convex cones. Immutable after
/// validation; cheap to copy (shared state). Rays are globally indexed
/// in canonical (descending lexicographic) order of their primitive
/// generators, and all divisor coefficient vectors use this order.
class Fan {
public:
    std::size_t ambient_rank() const;
    const std::vector<Cone>& cones() const;
    const std::vector<Vec>& rays() const;
    const std::vector<std::size_t>& max_cones() const;

    const Cone& cone(std::size_t i) const { return cones()[i]; }
    std::size_t num_cones() const { return cones().size(); }
    std::size_t num_rays() const { return rays().size(); }

    /// Index of the fan cone equal to c, if present.
    std::optional<std::size_t> find_cone(const Cone& c) const;
    /// Ray indices of cone i (ascending).
    std::vector<std::size_t> cone_rays(std::size_t i) const;
    std::size_t ray_index(const Vec& primitive) const;

    bool same_fan(const Fan& o) const;

private:
    friend Fan new_fan(std::size_t, const std::vector<Cone>&);
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// Validates the cones, completes faces, and builds the canonical fan.
/// Throws on improper pairwise intersections or non-strongly-convex input.
Fan new_fan(std::size_t ambient_rank, const std::vector<Cone>& cones);

/// True iff the maximal cones cover the whole space; decided by facet
/// pairing (every facet of a maximal cone shared by exactly two of them)
/// plus full dimensionality and connectivity.
bool is_complete(const Fan& f);

/// Map of fans given by an integer matrix Q on the ambient lattices.
class FanMap {
public:
    const Fan& source() const { return source_; }
    const Fan& target() const { return target_; }
    const IntMatrix& matrix() const { return q_; }

private:
    friend FanMap new_fan_map(const IntMatrix&, const Fan&, const Fan&);
    FanMap(IntMatrix q, Fan s, Fan t)
        : q_(std::move(q)), source_(std::move(s)), target_(std::move(t)) {}
    IntMatrix q_;
    Fan source_;
    Fan target_;
};

/// Validates the map-of-fans condition: every source cone maps into
/// some target cone.
FanMap new_fan_map(const IntMatrix& q, const Fan& source, const Fan& target);

/// The hull of all cones of f, provided it is strongly convex and every
/// cone of f is one of its faces; nullopt otherwise.
std::optional<Cone> enclosing_face_fan(const Fan& f);

/// The unique cone whose relative interior contains v; v must lie in
/// the support of f.
Cone smallest_containing_cone(const Fan& f, const Vec& v);

} // namespace torq

#endif
