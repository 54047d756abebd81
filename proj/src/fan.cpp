#include "torq/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace torq {

namespace {

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string cone_str(const Cone& c) {
    std::ostringstream os;
    os << "cone{";
    for (std::size_t i = 0; i < c.generators().size(); ++i)
        os << (i ? " " : "") << vec_str(c.generators()[i]);
    os << "}";
    return os.str();
}

} // namespace

struct Fan::Impl {
    std::size_t rank;
    std::vector<Cone> cones;
    std::vector<Vec> rays;
    std::vector<std::size_t> max_cones;
};

std::size_t Fan::ambient_rank() const { return impl_->rank; }
const std::vector<Cone>& Fan::cones() const { return impl_->cones; }
const std::vector<Vec>& Fan::rays() const { return impl_->rays; }
const std::vector<std::size_t>& Fan::max_cones() const { return impl_->max_cones; }

std::optional<std::size_t> Fan::find_cone(const Cone& c) const {
    for (std::size_t i = 0; i < impl_->cones.size(); ++i)
        if (same_cone(impl_->cones[i], c)) return i;
    return std::nullopt;
}

std::vector<std::size_t> Fan::cone_rays(std::size_t i) const {
    std::vector<std::size_t> out;
    for (const Vec& g : impl_->cones[i].generators()) out.push_back(ray_index(g));
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t Fan::ray_index(const Vec& primitive) const {
    for (std::size_t i = 0; i < impl_->rays.size(); ++i)
        if (impl_->rays[i] == primitive) return i;
    throw error("ray_index: not a ray of this fan: " + vec_str(primitive));
}

bool Fan::same_fan(const Fan& o) const {
    if (impl_ == o.impl_) return true;
    if (impl_->rank != o.impl_->rank || impl_->rays != o.impl_->rays ||
        impl_->cones.size() != o.impl_->cones.size())
        return false;
    for (std::size_t i = 0; i < impl_->cones.size(); ++i)
        if (impl_->cones[i].generators() != o.impl_->cones[i].generators())
            return false;
    return true;
}

Fan new_fan(std::size_t ambient_rank, const std::vector<Cone>& input) {
    auto impl = std::make_shared<Fan::Impl>();
    impl->rank = ambient_rank;

    std::map<std::vector<Vec>, Cone> seen;
    for (const Cone& c : input) {
        if (c.ambient_rank() != ambient_rank)
            throw error("new_fan: cone of wrong ambient rank");
        if (!is_strongly_convex(c))
            throw error("new_fan: cone is not strongly convex: " + cone_str(c));
        for (const Cone& f : faces(c)) seen.emplace(f.generators(), f);
    }
    std::vector<Cone> cones;
    for (auto& [key, c] : seen) cones.push_back(c);

    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = i + 1; j < cones.size(); ++j) {
            Cone inter = intersect(cones[i], cones[j]);
            if (!is_face(inter, cones[i]) || !is_face(inter, cones[j]))
                throw error("new_fan: improper intersection of " + cone_str(cones[i]) +
                            " and " + cone_str(cones[j]));
        }

    // canonical order: by dimension, then by generator list
    std::stable_sort(cones.begin(), cones.end(), [](const Cone& a, const Cone& b) {
        std::size_t da = a.dim(), db = b.dim();
        if (da != db) return da < db;
        const auto& ga = a.generators();
        const auto& gb = b.generators();
        return std::lexicographical_compare(
            ga.begin(), ga.end(), gb.begin(), gb.end(),
            [](const Vec& x, const Vec& y) { return canonical_vec_less(x, y); });
    });
    impl->cones = std::move(cones);

    for (const Cone& c : impl->cones)
        if (c.dim() == 1) impl->rays.push_back(c.generators()[0]);
    std::sort(impl->rays.begin(), impl->rays.end(), canonical_vec_less);

    for (std::size_t i = 0; i < impl->cones.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < impl->cones.size() && maximal; ++j) {
            if (i == j) continue;
            bool inside = true;
            for (const Vec& g : impl->cones[i].generators())
                if (!contains(impl->cones[j], g)) { inside = false; break; }
            if (inside && !same_cone(impl->cones[i], impl->cones[j])) maximal = false;
            if (inside && same_cone(impl->cones[i], impl->cones[j]) && j < i)
                maximal = false;  // cannot happen after dedup; keep first
        }
        if (maximal) impl->max_cones.push_back(i);
    }

    Fan f;
    f.impl_ = std::move(impl);
    return f;
}

bool is_complete(const Fan& f) {
    if (f.ambient_rank() == 0) return true;
    if (f.max_cones().empty()) return false;
    for (std::size_t mi : f.max_cones())
        if (f.cone(mi).dim() != f.ambient_rank()) return false;

    // facet pairing
    std::map<std::vector<Vec>, std::vector<std::size_t>> facet_owners;
    for (std::size_t mi : f.max_cones()) {
        const Cone& c = f.cone(mi);
        for (const Cone& face : faces(c))
            if (face.dim() + 1 == f.ambient_rank())
                facet_owners[face.generators()].push_back(mi);
    }
    for (const auto& [key, owners] : facet_owners)
        if (owners.size() != 2) return false;

    // connectivity of the facet-adjacency graph
    std::map<std::size_t, std::set<std::size_t>> adj;
    for (const auto& [key, owners] : facet_owners) {
        adj[owners[0]].insert(owners[1]);
        adj[owners[1]].insert(owners[0]);
    }
    std::set<std::size_t> visited;
    std::vector<std::size_t> stack{f.max_cones()[0]};
    while (!stack.empty()) {
        std::size_t cur = stack.back();
        stack.pop_back();
        if (!visited.insert(cur).second) continue;
        for (std::size_t nb : adj[cur]) stack.push_back(nb);
    }
    return visited.size() == f.max_cones().size();
}

FanMap new_fan_map(const IntMatrix& q, const Fan& source, const Fan& target) {
    if (q.cols() != source.ambient_rank() || q.rows() != target.ambient_rank())
        throw error("new_fan_map: matrix dimensions do not match ambient ranks");
    for (const Cone& c : source.cones()) {
        std::vector<Vec> images;
        for (const Vec& g : c.generators()) images.push_back(q * g);
        bool found = false;
        for (const Cone& t : target.cones()) {
            bool ok = true;
            for (const Vec& im : images)
                if (!contains(t, im)) { ok = false; break; }
            if (ok) { found = true; break; }
        }
        if (!found)
            throw error("new_fan_map: source cone maps into no target cone: " +
                        cone_str(c));
    }
    return FanMap(q, source, target);
}

std::optional<Cone> enclosing_face_fan(const Fan& f) {
    std::vector<Vec> allgens;
    for (const Cone& c : f.cones())
        for (const Vec& g : c.generators()) allgens.push_back(g);
    Cone hull(f.ambient_rank(), std::move(allgens));
    if (!is_strongly_convex(hull)) return std::nullopt;
    for (const Cone& c : f.cones())
        if (!is_face(c, hull)) return std::nullopt;
    return hull;
}

Cone smallest_containing_cone(const Fan& f, const Vec& v) {
    for (const Cone& c : f.cones())
        if (relint_contains(c, v)) return c;
    throw error("smallest_containing_cone: vector outside the support: " + vec_str(v));
}

} // namespace torq
