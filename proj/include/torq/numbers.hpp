#ifndef TORQ_NUMBERS_HPP
#define TORQ_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace torq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Vec = std::vector<Int>;
using QVec = std::vector<Rat>;

/// Error raised by semantic precondition violations (CLI maps it to exit 2).
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw error("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int gcd_vec(const Vec& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

inline bool is_zero_vec(const Vec& v) {
    for (const Int& x : v) if (x != 0) return false;
    return true;
}

/// Divide out the gcd; the zero vector is returned unchanged.
inline Vec make_primitive(Vec v) {
    Int g = gcd_vec(v);
    if (g > 1) for (Int& x : v) x /= g;
    return v;
}

inline Vec negate(Vec v) {
    for (Int& x : v) x = -x;
    return v;
}

inline Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw error("add: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw error("sub: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(const Vec& a, const Int& c) {
    Vec r(a);
    for (Int& x : r) x *= c;
    return r;
}

} // namespace torq

#endif
