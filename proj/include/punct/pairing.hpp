#pragma once

#include "punct/nat.hpp"

#include <utility>

namespace punct {

// Cantor pairing <x,y> = (x+y)(x+y+1)/2 + y. Strictly monotone in each
// argument; surjective onto the naturals.
inline Nat pair_code(const Nat& x, const Nat& y) {
    Nat s = x + y;
    return s * (s + 1) / 2 + y;
}

// Inverse of pair_code. Components of z are < z for every z >= 2; the only
// exception below that bound is z = 1 = <1,0>.
inline std::pair<Nat, Nat> unpair_code(const Nat& z) {
    Nat w = (isqrt(8 * z + 1) - 1) / 2;
    Nat t = w * (w + 1) / 2;
    while (t > z) { --w; t = w * (w + 1) / 2; } // guard sqrt edge cases
    while (t + w + 1 <= z) { ++w; t += w; }
    Nat y = z - t;
    return {w - y, y};
}

} // namespace punct
