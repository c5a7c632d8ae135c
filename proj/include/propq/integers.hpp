#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace propq {

// Signed integer of unbounded magnitude; arithmetic never wraps.
using Int = boost::multiprecision::cpp_int;

inline std::string to_string(const Int& v) { return v.str(); }

// Greatest common divisor, always >= 0; gcd(0, 0) = 0.
// Call qualified (propq::gcd) to keep ADL from dragging in boost's overload.
inline Int gcd(Int u, Int w) {
    if (u < 0) u = -u;
    if (w < 0) w = -w;
    while (w != 0) {
        Int r = u % w;
        u = std::move(w);
        w = std::move(r);
    }
    return u;
}

// True iff w = u * q for some integer q. divides(0, 0) holds; 0 divides
// nothing else.
inline bool divides(const Int& u, const Int& w) {
    if (u == 0) return w == 0;
    return w % u == 0;
}

} // namespace propq
