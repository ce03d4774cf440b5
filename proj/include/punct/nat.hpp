#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace punct {

// Arbitrary-precision natural number. The underlying type is signed; every
// public operation in this library keeps values >= 0, and a handful of
// internal spots (ceil_div in the island engine, polynomial coefficient
// differences) exploit the signedness deliberately.
using Nat = boost::multiprecision::cpp_int;

inline Nat pow2(const Nat& e) {
    Nat r = 1;
    return r << static_cast<std::size_t>(e);
}

// base^exp for exponents that fit a machine word. Callers guard growth
// before converting (see levitz eval's digit cap).
inline Nat nat_pow(const Nat& base, std::uint64_t exp) {
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

inline Nat isqrt(const Nat& n) { return boost::multiprecision::sqrt(n); }

// Number of bits in n (0 for n == 0).
inline std::uint64_t bit_width(const Nat& n) {
    if (n == 0) return 0;
    return static_cast<std::uint64_t>(boost::multiprecision::msb(n)) + 1;
}

inline bool bit_test(const Nat& n, const Nat& i) {
    if (i >= bit_width(n)) return false;
    return boost::multiprecision::bit_test(const_cast<Nat&>(n), static_cast<std::size_t>(i));
}

inline void bit_set(Nat& n, const Nat& i) {
    boost::multiprecision::bit_set(n, static_cast<std::size_t>(i));
}

inline void bit_unset(Nat& n, const Nat& i) {
    boost::multiprecision::bit_unset(n, static_cast<std::size_t>(i));
}

inline std::uint64_t popcount(const Nat& n) {
    std::uint64_t c = 0;
    for (Nat m = n; m != 0; m &= m - 1) ++c;
    return c;
}

inline std::string to_string(const Nat& n) { return n.str(); }

// Ceiling division; works for negative numerators (island engine Connect).
inline Nat ceil_div(const Nat& num, const Nat& den) {
    Nat q = num / den;
    if (num % den != 0 && ((num > 0) == (den > 0))) ++q;
    return q;
}

} // namespace punct
