#pragma once

#include <initializer_list>
#include <string>

#include "clawdeg/exact_geometry.hpp"
#include "clawdeg/polytope_io.hpp"

namespace testing {

inline clawdeg::RatPoint pt(std::initializer_list<const char*> xs) {
    clawdeg::RatPoint p;
    for (const char* x : xs) p.push_back(clawdeg::parse_rat(x));
    return p;
}

inline clawdeg::RatPoint ipt(std::initializer_list<int> xs) {
    clawdeg::RatPoint p;
    for (int x : xs) p.emplace_back(x);
    return p;
}

inline clawdeg::HalfSpace hs(std::initializer_list<int> normal, int offset) {
    clawdeg::HalfSpace h;
    for (int a : normal) h.normal.emplace_back(a);
    h.offset = offset;
    return h;
}

/// [lo,hi]^d as an H-polytope.
inline clawdeg::HPolytope box(int d, int lo = 0, int hi = 1) {
    clawdeg::HPolytope h;
    h.dim = d;
    for (int i = 0; i < d; ++i) {
        clawdeg::HalfSpace up{clawdeg::IntVector(d, 0), hi};
        up.normal[i] = 1;
        clawdeg::HalfSpace down{clawdeg::IntVector(d, 0), -lo};
        down.normal[i] = -1;
        h.add(up);
        h.add(down);
    }
    return h;
}

inline clawdeg::VPolytope unit_square() {
    return clawdeg::VPolytope(2, {ipt({0, 0}), ipt({1, 0}), ipt({0, 1}), ipt({1, 1})});
}

}  // namespace testing
