#pragma once

#include <cstddef>
#include <boost/multiprecision/cpp_int.hpp>

namespace hnkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Bit size of an integer: 1 + ceil(log2(1+|a|)), computed from bit
/// lengths only (no floating point).
inline std::size_t int_size(const Int& a) {
    Int m = abs(a) + 1;
    if (m == 1) return 1;
    std::size_t b = boost::multiprecision::msb(m);  // floor(log2 m)
    bool pow2 = (m & (m - 1)) == 0;
    return 1 + (pow2 ? b : b + 1);
}

inline Int int_pow(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

}  // namespace hnkit
